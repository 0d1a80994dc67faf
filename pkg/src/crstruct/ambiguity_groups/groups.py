"""Embedding, composition and inversion of group parameters, and axiom checks."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..matrix_algebra import (
    RingMatrix,
    identity,
    mat_inverse,
    mat_mul,
    mat_substitute,
    numeric_mul,
)
from ..scalar_kernel import GaussRat, UnitFraction, ZeroUnit
from .templates import GroupTemplate, _conj_closed


class MissingParam(KeyError):
    pass


class ClosureViolation(ArithmeticError):
    def __init__(self, message: str, residual_terms: int):
        super().__init__(message)
        self.residual_terms = residual_terms


class PatternMismatch(ArithmeticError):
    def __init__(self, message: str, residual_terms: int):
        super().__init__(message)
        self.residual_terms = residual_terms


def _lift_assignment(t: GroupTemplate, p: dict) -> dict[str, UnitFraction]:
    out = {}
    for spec in t.params:
        if spec.name not in p:
            raise MissingParam(f"group {t.id}: parameter {spec.name!r} not assigned")
        v = UnitFraction.lift(p[spec.name])
        if spec.unit and v.is_zero():
            raise ZeroUnit(f"unit parameter {spec.name} assigned 0")
        if spec.real and v.conj() != v:
            raise ValueError(f"real parameter {spec.name} assigned {v.to_expr()}")
        out[spec.name] = v
    return out


def embed(t: GroupTemplate, p: dict) -> RingMatrix:
    """The template matrix at the assignment ``p`` (symbolic or numeric)."""
    values = _lift_assignment(t, p)
    mapping = _conj_closed(t.symbols(), values)
    return t.template_matrix().map(lambda x: x.subs(mapping))


def residual_terms(A: RingMatrix, B: RingMatrix) -> int:
    """Total number of numerator terms of A - B."""
    return sum(len(x.numerator) for row in (A - B).rows for x in row)


def read_params(t: GroupTemplate, M: RingMatrix) -> dict[str, UnitFraction]:
    return {name: M[ij] for name, ij in t.positions().items()}


def compose_params(t: GroupTemplate, p1: dict, p2: dict) -> dict[str, UnitFraction]:
    product = mat_mul(embed(t, p1), embed(t, p2))
    p3 = read_params(t, product)
    r = residual_terms(embed(t, p3), product)
    if r:
        raise ClosureViolation(f"group {t.id}: product leaves the template ({r} residual terms)", r)
    return p3


def invert_params(t: GroupTemplate, p: dict) -> dict[str, UnitFraction]:
    p = _lift_assignment(t, p)
    inv = mat_inverse(embed(t, p), t.units_for(p))
    q = read_params(t, inv)
    r = residual_terms(embed(t, q), inv)
    if r:
        raise PatternMismatch(f"group {t.id}: inverse leaves the template ({r} residual terms)", r)
    return q


def params_equal(t: GroupTemplate, p: dict, q: dict) -> int:
    """Number of residual terms between two assignments (0 when equal)."""
    return sum(
        len((UnitFraction.lift(p[n]) - UnitFraction.lift(q[n])).numerator) for n in t.names
    )


@dataclass
class CheckResult:
    group: str
    check: str
    status: str
    residual_terms: int
    details: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "group": self.group,
            "check": self.check,
            "status": self.status,
            "residual_terms": self.residual_terms,
            "details": list(self.details),
        }


@dataclass
class VerificationReport:
    group: str
    checks: list[CheckResult]

    @property
    def ok(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def to_json(self) -> list[dict]:
        return [c.to_dict() for c in self.checks]


CHECKS = ("closure", "inverse", "assoc", "identity")


def random_params(t: GroupTemplate, rng: random.Random, span: int = 5) -> dict[str, GaussRat]:
    out = {}
    for spec in t.params:
        while True:
            re = rng.randint(-span, span)
            im = 0 if spec.real else rng.randint(-span, span)
            if re or im or not spec.unit:
                break
        out[spec.name] = GaussRat(re, im)
    return out


def _numeric(t: GroupTemplate, p: dict):
    return mat_substitute(embed(t, p), {})


def _check_closure(t, rng):
    p1, p2 = t.generic("1"), t.generic("2")
    try:
        p3 = compose_params(t, p1, p2)
    except ClosureViolation as exc:
        return "fail", exc.residual_terms, [str(exc)]
    details = [f"{n}3 = {p3[n].to_expr()}" for n in t.names]
    q1, q2 = random_params(t, rng), random_params(t, rng)
    lhs = numeric_mul(_numeric(t, q1), _numeric(t, q2))
    rhs = _numeric(t, compose_params(t, q1, q2))
    spot = lhs == rhs
    details.append(f"numeric spot check: {'ok' if spot else 'MISMATCH'}")
    return ("pass" if spot else "fail"), 0, details


def _check_inverse(t, rng):
    p = t.generic()
    try:
        q = invert_params(t, p)
    except PatternMismatch as exc:
        return "fail", exc.residual_terms, [str(exc)]
    M, Mq = embed(t, p), embed(t, q)
    r = residual_terms(mat_mul(Mq, M), identity(t.n)) + residual_terms(mat_mul(M, Mq), identity(t.n))
    details = [f"{n}~ = {q[n].to_expr()}" for n in t.names]
    return ("pass" if r == 0 else "fail"), r, details


def _check_assoc(t, rng):
    p1, p2, p3 = t.generic("1"), t.generic("2"), t.generic("3")
    try:
        left = compose_params(t, compose_params(t, p1, p2), p3)
        right = compose_params(t, p1, compose_params(t, p2, p3))
    except ClosureViolation as exc:
        return "fail", exc.residual_terms, [str(exc)]
    r = params_equal(t, left, right)
    return ("pass" if r == 0 else "fail"), r, ["(p1*p2)*p3 versus p1*(p2*p3), three generic tuples"]


def _check_identity(t, rng):
    e = t.identity_params()
    r = residual_terms(embed(t, e), identity(t.n))
    p = t.generic()
    try:
        r += params_equal(t, compose_params(t, p, e), p)
        r += params_equal(t, compose_params(t, e, p), p)
    except ClosureViolation as exc:
        return "fail", exc.residual_terms, [str(exc)]
    return ("pass" if r == 0 else "fail"), r, ["embed(e) = Id, p*e = p, e*p = p"]


_RUNNERS = {
    "closure": _check_closure,
    "inverse": _check_inverse,
    "assoc": _check_assoc,
    "identity": _check_identity,
}


def verify_group(t: GroupTemplate, checks=CHECKS, seed: int = 0) -> VerificationReport:
    rng = random.Random(seed)
    results = []
    for name in checks:
        try:
            status, r, details = _RUNNERS[name](t, rng)
        except Exception as exc:  # a broken template must show up as a failed check
            status, r, details = "fail", -1, [f"{type(exc).__name__}: {exc}"]
        results.append(CheckResult(t.id, name, status, r, details))
    return VerificationReport(t.id, results)
