"""Acceptance gate: one PASS/FAIL line per criterion.

Each test prints its verdict line straight to the terminal and then asserts
it, so a red criterion shows up both in the printed line and as a failed
test.  Nothing here is tuned to force a result.
"""

import random
import time
from fractions import Fraction

import pytest

from crstruct.ambiguity_groups import (
    compare_group_with_printed,
    compose_params,
    embed,
    get_template,
    invert_params,
    lie_algebra_basis,
    lie_dimension,
    verify_group,
    verify_lie_closure,
)
from crstruct.ambiguity_groups.printed import printed_inverse_params
from crstruct.frame_calculus import (
    CLASSES,
    VectorExpr,
    compare_with_printed,
    derive_transfer,
    get_class,
    keystone,
    vf_bracket,
    vf_conj,
)
from crstruct import hypersurface_lab as hl
from crstruct.matrix_algebra import mat_inverse
from crstruct.scalar_kernel import (
    GaussRat,
    StarPoly,
    Symbol,
    UnitFraction,
    evaluate_poly,
    frac_arith,
    parse_expr,
    substitute,
)

GROUPS = ("I", "II", "III1", "III2", "IV1", "IV2")
SEED = 20240601


@pytest.fixture
def report(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\nCRITERION {n}: {'PASS' if ok else 'FAIL'} ({detail})")
        return ok

    return emit


def test_criterion_1_group_axioms(report):
    bad = []
    for g in GROUPS:
        for c in verify_group(get_template(g), seed=SEED).checks:
            if c.status != "pass" or c.residual_terms != 0:
                bad.append(f"{g}/{c.check}")
    ok = report(1, not bad, f"6 groups x 4 checks, exact; failures: {bad or 'none'}")
    assert ok


LAWS = {
    "I": {"a": "a1*a2", "b": "b1*a2 + a1*conj(a1)*b2"},
    "II": {
        "c": "c1*a2*conj(a2) + a1*a1*conj(a1)*c2",
        "d": "d1*conj(a2) + c1*conj(b2) + a1*a1*conj(a1)*d2",
        "e": "e1*a2 + c1*b2 + a1*a1*conj(a1)*e2",
    },
    "III2": {
        "f": "f1*a2*a2*conj(a2) + a1*a1*a1*conj(a1)*f2",
        "g": "g1*a2*conj(a2) + f1*c2 + a1*a1*a1*conj(a1)*g2",
        "h": "h1*conj(a2) + g1*conj(b2) + f1*d2 + a1*a1*a1*conj(a1)*h2",
        "k": "k1*a2 + g1*b2 + f1*e2 + a1*a1*a1*conj(a1)*k2",
    },
}


def test_criterion_2_composition_laws(report):
    bad, n = [], 0
    for g, laws in LAWS.items():
        t = get_template(g)
        p3 = compose_params(t, t.generic("1"), t.generic("2"))
        table = {}
        for s in ("1", "2"):
            table.update({x.name: x for x in t.symbols(s).values()})
        for name, text in laws.items():
            n += 1
            if p3[name] != parse_expr(text, symbols=table):
                bad.append(f"{g}.{name}3")
    ok = report(2, not bad, f"{n} printed laws as exact identities; failures: {bad or 'none'}")
    assert ok


def test_criterion_3_inverse_formulas(report):
    oracle_bad = []
    for g in GROUPS:
        t = get_template(g)
        p = t.generic()
        units = t.units_for(p) if t.derived_units else ()
        if embed(t, invert_params(t, p)) != mat_inverse(embed(t, p), units=units):
            oracle_bad.append(g)
    t = get_template("III2")
    inv = invert_params(t, t.generic())
    printed = printed_inverse_params("III2")
    quoted_bad = [k for k in ("f", "g", "k") if inv[k] != printed[k]]
    statuses = [r for g in GROUPS for r in compare_group_with_printed(g)]
    errata = sum(r.status == "erratum" for r in statuses)
    mismatches = [f"{r.group}:{r.entry}" for r in statuses if r.status == "mismatch"]
    ok = not oracle_bad and not quoted_bad and not mismatches
    report(
        3, ok,
        f"adjugate agreement failures: {oracle_bad or 'none'}; quoted f~ g~ k~ failures: "
        f"{quoted_bad or 'none'}; {errata} ambiguous printed variants logged as errata; "
        f"unambiguous printed entries that disagree with the adjugate: {mismatches or 'none'}",
    )
    assert ok


def test_criterion_4_dimensions(report):
    dims = tuple(lie_dimension(lie_algebra_basis(get_template(g))) for g in GROUPS)
    closed = all(verify_lie_closure(lie_algebra_basis(get_template(g))) for g in GROUPS)
    ok = dims == (4, 10, 10, 18, 13, 10) and closed
    report(4, ok, f"dimensions {dims}, commutator closure {'holds' if closed else 'FAILS'}")
    assert ok


DOCUMENTED_ERRATA = {("I", "b"), ("II", "matrix (4,4)"), ("III1", "matrix (4,4)")}


def test_criterion_5_transfer_derivations(report):
    spec = get_class("II")
    d = derive_transfer("II")
    want = {
        "c": "-I*a*conj(b) + a*L(a*conj(a))",
        "d": "a*L(conj(b))",
        "e": "a*L(b) - a*conj(a)*T(a) - conj(b)*Lbar(a) - b*L(a)",
    }
    defs_ok = all(d.definitions[k] == spec.parse(v) for k, v in want.items())
    found = sorted((c, r.entry) for c in CLASSES for r in compare_with_printed(c).errata)
    extra = [e for e in found if e not in DOCUMENTED_ERRATA]
    has_b = ("I", "b") in found
    has_44 = any(e[1] == "matrix (4,4)" for e in found)
    ok = defs_ok and has_b and has_44 and not extra
    report(
        5, ok,
        f"II c,d,e {'match' if defs_ok else 'DIFFER'}; errata found {len(found)}: {found}; "
        f"beyond the two documented: {extra or 'none'}",
    )
    assert ok


def test_criterion_6_keystone(report):
    res = {c: keystone(c) for c in CLASSES}
    bad = [c for c, k in res.items() if not (k.pattern_equal and k.diagonal_equal)]
    full = [c for c, k in res.items() if k.full_equal]
    ok = report(6, not bad, f"pattern+diagonal failures: {bad or 'none'}; full equality in {len(full)}/6")
    assert ok


def test_criterion_7_hypersurface_lab(report):
    rng = random.Random(SEED)
    H = hl.hypersurface("C2", "x^2 + y^2")
    verdicts = []
    for _ in range(25):
        x, y, u = (Fraction(rng.randint(-20, 20), rng.randint(1, 9)) for _ in range(3))
        v = x * x + y * y
        verdicts.append(hl.classify_point(H, [x, y, u, v]))
    heis = all(v.verdict == "ClassI" and v.rank == 3 for v in verdicts)
    flat = hl.classify_point(hl.hypersurface("C2", "0"), [0, 0, 0, 0])
    iv1 = hl.classify_point(hl.hypersurface("C3", "x1^2 + y1^2 + x2^2 + y2^2"), [0] * 6)
    iv2 = hl.classify_point(hl.hypersurface("C3", "x1^2 + y1^2"), [0] * 6)
    ident = hl.multiplier_at(hl.HoloMap.from_strings("z'", "w'"), H, H, [1, 2, 3, 5])
    lam = GaussRat(3, -2)
    dil = hl.multiplier_at(hl.HoloMap.from_strings("(3 - 2*I)*z'", "13*w'"), H, H, [1, 2, 3, 5])
    ok = (
        heis
        and flat.rank == 2 and flat.verdict == "Degenerate"
        and iv1.verdict == "ClassIV1" and iv1.details["levi_det"] != "0"
        and iv2.verdict == "ClassIV2-candidate"
        and ident.a == 1 and ident.residual == 0
        and dil.a == lam and dil.residual == 0
    )
    report(
        7, ok,
        f"25/25 ClassI: {heis}; flat rank {flat.rank}; C3 sphere {iv1.verdict}; "
        f"x1^2+y1^2 {iv2.verdict}; identity a={ident.a.to_expr()}; dilation a={dil.a.to_expr()}",
    )
    assert ok


# criterion 8: fixed-seed property suites with explicit counts

_A = Symbol("a", unit=True)
_SYMS = [_A, Symbol("b"), Symbol("c")]
_ALL = _SYMS + [s.conj() for s in _SYMS]


def _rand_gr(rng, nonzero=False):
    while True:
        x = GaussRat(Fraction(rng.randint(-4, 4), rng.randint(1, 3)), Fraction(rng.randint(-4, 4), rng.randint(1, 3)))
        if x or not nonzero:
            return x


def _rand_poly(rng, terms=3):
    p = StarPoly()
    for _ in range(rng.randint(0, terms)):
        m = StarPoly.constant(_rand_gr(rng))
        for _ in range(rng.randint(0, 3)):
            m = m * StarPoly.symbol(rng.choice(_ALL))
        p = p + m
    return p


def _rand_frac(rng):
    den = StarPoly.constant(1)
    for _ in range(rng.randint(0, 2)):
        den = den * StarPoly.symbol(rng.choice([_A, _A.conj()]))
    return UnitFraction(_rand_poly(rng)) / UnitFraction(den)


def _rand_binding(rng):
    out = {}
    for s in _SYMS:
        v = _rand_gr(rng, nonzero=s.unit)
        out[s], out[s.conj()] = v, v.conj()
    return out


def _ring(rng, n):
    for _ in range(n):
        p, q, r = (_rand_poly(rng) for _ in range(3))
        if not (p + q == q + p and p * q == q * p and (p + q) + r == p + (q + r)
                and (p * q) * r == p * (q * r) and p * (q + r) == p * q + p * r):
            return False
    return True


def _conj(rng, n):
    for _ in range(n):
        p, q = _rand_poly(rng), _rand_poly(rng)
        if not (p.conj().conj() == p and (p + q).conj() == p.conj() + q.conj()
                and (p * q).conj() == p.conj() * q.conj()):
            return False
    return True


def _subst(rng, n):
    for _ in range(n):
        f, g, b = _rand_frac(rng), _rand_frac(rng), _rand_binding(rng)
        x, y = substitute(f, b), substitute(g, b)
        for op, val in (("add", x + y), ("sub", x - y), ("mul", x * y)):
            if substitute(frac_arith(op, f, g), b) != val:
                return False
    return True


def _rand_field(rng, cid, frames):
    spec = get_class(cid)
    atoms = ["a", "conj(a)", "b", "conj(b)", "L(a)", "T(b)"] if cid != "I" else ["a", "conj(a)", "b", "L(a)"]
    v = VectorExpr()
    for name in frames:
        coeff = spec.parse(" + ".join(f"{rng.randint(-2, 2)}*{rng.choice(atoms)}" for _ in range(2)))
        v = v + VectorExpr.of(spec.frame(name), coeff)
    return v


def _brackets(rng, n):
    cases = [("I", ("L", "Lbar")), ("II", ("L", "Lbar", "T")), ("III2", ("L", "Lbar", "T"))]
    for i in range(n):
        cid, frames = cases[i % len(cases)]
        table = get_class(cid).table
        X, Y, Z = (_rand_field(rng, cid, frames) for _ in range(3))
        k = _rand_gr(rng)
        xz = vf_bracket(X, Z, table)
        if not (vf_bracket(X, Y, table) == -vf_bracket(Y, X, table)
                and vf_bracket(X + Y, Z, table) == xz + vf_bracket(Y, Z, table)
                and vf_bracket(X.scale(k), Z, table) == xz.scale(k)
                and vf_conj(xz) == vf_bracket(vf_conj(X), vf_conj(Z), table)):
            return False
    return True


def _rescaling(rng, n):
    phis = ["x^2 + y^2", "0", "x^3 + y^2*u", "x*y + u^2 + x^2"]
    factors = ["1 + x^2", "2 + I*y + u^2", "3 + x*y*u"]
    done = 0
    while done < n:
        M = hl.hypersurface("C2", phis[done % len(phis)])
        pt = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(3)]
        q = M.point_values(pt)
        names = {s.name: s for s in M.coords}
        f = hl.RationalFunc(parse_expr(rng.choice(factors), symbols=names).numerator)
        if not f.evaluate(q):
            continue
        (L,) = hl.build_generators(M)
        fL = L.scale(f)
        r1 = hl.rank_at_point([L, L.conj(), hl.coord_bracket(L, L.conj())], q)
        r2 = hl.rank_at_point([fL, fL.conj(), hl.coord_bracket(fL, fL.conj())], q)
        if r1 != r2:
            return False
        done += 1
    return True


def test_criterion_8_property_suites(report):
    rng = random.Random(SEED)
    t0 = time.perf_counter()
    suites = {
        "ring axioms x500": _ring(rng, 500),
        "conj involution/homomorphism x500": _conj(rng, 500),
        "substitution homomorphism x200": _subst(rng, 200),
        "bracket antisymmetry/bilinearity x200": _brackets(rng, 200),
        "rescaling invariance x50": _rescaling(rng, 50),
    }
    elapsed = time.perf_counter() - t0
    bad = [k for k, v in suites.items() if not v]
    ok = report(8, not bad, f"seed {SEED}; {len(suites) - len(bad)}/5 suites exact; failures: {bad or 'none'}; {elapsed:.1f}s")
    assert ok
