"""Polynomials localized at unit symbols."""

from __future__ import annotations

from typing import Mapping

from .errors import InconsistentConjugation, NotAUnit, UnboundSymbol, ZeroUnit
from .gaussrat import ONE, GaussRat
from .poly import ONE_MONO, Monomial, StarPoly


def _expand_derived(p: StarPoly) -> StarPoly:
    mapping = {s: s.definition for s in p.symbols() if s.definition is not None}
    return p.subs(mapping) if mapping else p


class UnitFraction:
    """``numerator / denominator`` with a unit monomial denominator.

    The constructor canonicalizes: derived units are expanded in the
    numerator, cancelled against the denominator where the numerator is an
    exact multiple of their definition, and plain unit powers common to both
    sides are removed.  Equal values therefore have equal fields.
    """

    __slots__ = ("numerator", "denominator", "_hash")

    def __init__(self, numerator, denominator: Monomial = ONE_MONO):
        num = StarPoly._lift(numerator)
        for s, _ in denominator.factors:
            if not s.unit:
                raise NotAUnit(f"{s.to_expr()} is not a unit symbol")
        num = _expand_derived(num)
        if num.is_zero():
            denominator = ONE_MONO
        elif denominator:
            exps = denominator.as_dict()
            for s in list(exps):
                if s.definition is None:
                    continue
                d = _expand_derived(s.definition)
                while exps[s]:
                    q, r = num.divmod(d)
                    if r:
                        break
                    num = q
                    exps[s] -= 1
            denominator = Monomial.from_dict(exps)
            common = num.min_exponents().gcd(denominator)
            if common:
                num = num.div_mono(common)
                denominator = denominator / common
        self.numerator = num
        self.denominator = denominator
        self._hash = None

    @classmethod
    def lift(cls, value) -> UnitFraction:
        if isinstance(value, UnitFraction):
            return value
        return cls(StarPoly._lift(value))

    def is_polynomial(self) -> bool:
        return not self.denominator

    def to_poly(self) -> StarPoly:
        if self.denominator:
            raise ValueError(f"{self.to_expr()} has a nontrivial denominator")
        return self.numerator

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def __bool__(self):
        return not self.numerator.is_zero()

    def symbols(self) -> set:
        return self.numerator.symbols() | set(self.denominator.symbols())

    def __eq__(self, other):
        if not isinstance(other, UnitFraction):
            try:
                other = UnitFraction.lift(other)
            except TypeError:
                return NotImplemented
        return self.numerator == other.numerator and self.denominator == other.denominator

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.numerator, self.denominator))
        return self._hash

    def __repr__(self):
        return f"UnitFraction({self.to_expr()})"

    def __str__(self):
        return self.to_expr()

    def to_expr(self) -> str:
        num = self.numerator.to_expr()
        if not self.denominator:
            return num
        if len(self.numerator) > 1:
            num = f"({num})"
        den = self.denominator.to_expr()
        if len(self.denominator.factors) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    def __neg__(self):
        return UnitFraction(-self.numerator, self.denominator)

    def __add__(self, other):
        other = UnitFraction.lift(other)
        den = self.denominator.lcm(other.denominator)
        num = self.numerator.mul_mono(den / self.denominator) + other.numerator.mul_mono(
            den / other.denominator
        )
        return UnitFraction(num, den)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-UnitFraction.lift(other))

    def __rsub__(self, other):
        return UnitFraction.lift(other) - self

    def __mul__(self, other):
        other = UnitFraction.lift(other)
        return UnitFraction(
            self.numerator * other.numerator, self.denominator * other.denominator
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * frac_inv(UnitFraction.lift(other))

    def __rtruediv__(self, other):
        return UnitFraction.lift(other) * frac_inv(self)

    def __pow__(self, n: int):
        if n < 0:
            return frac_inv(self) ** (-n)
        return UnitFraction(self.numerator**n, self.denominator**n)

    def conj(self) -> UnitFraction:
        return UnitFraction(self.numerator.conj(), self.denominator.conj())

    def scale(self, coeff) -> UnitFraction:
        return UnitFraction(self.numerator.scale(coeff), self.denominator)

    def diff(self, symbol) -> UnitFraction:
        """Partial derivative, quotient rule against the monomial denominator."""
        if not self.denominator:
            return UnitFraction(self.numerator.diff(symbol))
        e = self.denominator.exponent(symbol)
        num = self.numerator.diff(symbol)
        if e:
            # d(N/(s^e m)) = N'/(s^e m) - e N/(s^{e+1} m)
            head = UnitFraction(num, self.denominator)
            tail = UnitFraction(
                self.numerator.scale(-e), self.denominator * Monomial.of(symbol)
            )
            return head + tail
        return UnitFraction(num, self.denominator)

    def subs(self, mapping: Mapping) -> UnitFraction:
        """Symbolic substitution of symbols by polynomials or fractions."""
        num = _subs_frac_poly(self.numerator, mapping)
        den = _subs_frac_poly(StarPoly.monomial(self.denominator), mapping)
        return num / den


def _subs_frac_poly(p: StarPoly, mapping: Mapping) -> UnitFraction:
    total = UnitFraction(0)
    for m, c in p.items():
        term = UnitFraction(StarPoly.constant(c))
        for s, e in m.factors:
            v = UnitFraction.lift(mapping[s]) if s in mapping else UnitFraction(StarPoly.symbol(s))
            term = term * v**e
        total = total + term
    return total


def frac_arith(kind: str, f: UnitFraction, g: UnitFraction) -> UnitFraction:
    f, g = UnitFraction.lift(f), UnitFraction.lift(g)
    if kind == "add":
        return f + g
    if kind == "mul":
        return f * g
    if kind == "sub":
        return f - g
    raise ValueError(f"unknown operation {kind!r}")


def frac_inv(f, units=()) -> UnitFraction:
    """Reciprocal in the localized ring.

    ``units`` lists extra derived units that may be used: if the numerator
    equals (a constant times) the definition of one of them, that symbol is
    moved into the denominator.
    """
    f = UnitFraction.lift(f)
    num = f.numerator
    if num.is_zero():
        raise NotAUnit("0 is not invertible")
    if len(num) == 1:
        mono, coeff = next(iter(num.items()))
        bad = [s for s in mono.symbols() if not s.unit]
        if bad:
            raise NotAUnit(f"{bad[0].to_expr()} is not a unit symbol")
        return UnitFraction(StarPoly.monomial(f.denominator, coeff.inverse()), mono)
    for u in units:
        d = _expand_derived(u.definition)
        q, r = num.divmod(d)
        if r.is_zero():
            try:
                inner = frac_inv(UnitFraction(q, f.denominator), units)
            except NotAUnit:
                continue
            return inner * UnitFraction(ONE_POLY, Monomial.of(u))
    raise NotAUnit(f"{f.to_expr()} is not a unit of the localized ring")


ONE_POLY = StarPoly.constant(ONE)


def check_binding(binding: Mapping) -> dict:
    """Validate a binding and close it under conjugation."""
    full = {}
    for s, v in binding.items():
        v = GaussRat.coerce(v)
        full[s] = v
    for s, v in list(full.items()):
        c = s.conj()
        if s.real and not v.is_real():
            raise InconsistentConjugation(f"real symbol {s.to_expr()} bound to {v}")
        if c in full:
            if full[c] != v.conj():
                raise InconsistentConjugation(
                    f"{c.to_expr()} = {full[c]} is not the conjugate of {s.to_expr()} = {v}"
                )
        else:
            full[c] = v.conj()
    return full


def evaluate_poly(p: StarPoly, values: Mapping) -> GaussRat:
    total = GaussRat(0)
    for m, c in p.items():
        term = c
        for s, e in m.factors:
            if s in values:
                v = values[s]
            elif s.definition is not None:
                v = evaluate_poly(s.definition, values)
            else:
                raise UnboundSymbol(s)
            term = term * v**e
        total = total + term
    return total


def substitute(f, binding: Mapping) -> GaussRat:
    """Exact numeric value of ``f`` under a conjugation-consistent binding."""
    f = UnitFraction.lift(f)
    values = check_binding(binding)
    num = evaluate_poly(f.numerator, values)
    den = GaussRat(1)
    for s, e in f.denominator.factors:
        if s in values:
            v = values[s]
        elif s.definition is not None:
            v = evaluate_poly(s.definition, values)
        else:
            raise UnboundSymbol(s)
        if not v:
            raise ZeroUnit(f"unit symbol {s.to_expr()} evaluates to 0")
        den = den * v**e
    for s in f.numerator.symbols():
        if s.unit and values.get(s, 1) == 0:
            raise ZeroUnit(f"unit symbol {s.to_expr()} evaluates to 0")
    return num / den
