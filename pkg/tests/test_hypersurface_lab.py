from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from crstruct import hypersurface_lab as hl
from crstruct.hypersurface_lab import (
    CoordVectorField,
    HoloMap,
    PointNotOnM,
    PoleAtPoint,
    RationalFunc,
    ZeroDenominator,
    build_generators,
    classify_point,
    coord_bracket,
    generator_coefficients,
    hypersurface,
    levi_matrix,
    multiplier_at,
    rank_at_point,
)
from crstruct.scalar_kernel import GaussRat, StarPoly, parse_expr

I = GaussRat(0, 1)


def rf(M, text):
    names = {s.name: s for s in M.coords}
    v = parse_expr(text, symbols=names)
    return RationalFunc(v.numerator)


def heisenberg():
    return hypersurface("C2", "x^2 + y^2")


def on_graph(M, xs):
    vals = dict(zip(M.coords, [GaussRat(x) for x in xs]))
    from crstruct.scalar_kernel import evaluate_poly
    return list(xs) + [evaluate_poly(M.phi, vals).re]


# generators

def test_generator_coefficients_examples():
    M = heisenberg()
    (A,) = generator_coefficients(M)
    assert A == rf(M, "-I*(x - I*y)")
    (A,) = generator_coefficients(hypersurface("C2", "0"))
    assert A.is_zero()
    M3 = hypersurface("C3", "x1^2 + y1^2")
    A1, A2 = generator_coefficients(M3)
    assert A1 == rf(M3, "-I*(x1 - I*y1)") and A2.is_zero()


def test_generator_is_tangent():
    # L (v - phi) = 0 on M: the ambient d/dw coefficient is -2A
    M = hypersurface("C2", "x^3*u + y^2 - 2*u^2*x")
    (one, mu), = hl.ambient_generator(M)
    (A,) = generator_coefficients(M)
    assert mu == A * RationalFunc(-2)
    (L,) = build_generators(M)
    x, y, u = M.coords
    assert L[x] == RationalFunc(GaussRat(Fraction(1, 2)))
    assert L[y] == RationalFunc(GaussRat(0, Fraction(-1, 2)))
    assert L[u] == -A


def test_heisenberg_bracket():
    M = heisenberg()
    (L,) = build_generators(M)
    br = coord_bracket(L, L.conj())
    x, y, u = M.coords
    assert br[x].is_zero() and br[y].is_zero()
    assert br[u] == RationalFunc(GaussRat(0, -2))


def test_bracket_against_frozen_oracle():
    # sympy: phi = x^2 + u y^2 + x y u, [L, Lbar] at (1, 2, 3)
    M = hypersurface("C2", "x^2 + u*y^2 + x*y*u")
    (L,) = build_generators(M)
    vals = M.point_values([1, 2, 3])
    assert coord_bracket(L, L.conj()).evaluate(vals) == [
        GaussRat(0), GaussRat(0), GaussRat(0, Fraction(408, 1369))
    ]
    assert generator_coefficients(M)[0].evaluate(vals) == GaussRat(Fraction(33, 74), Fraction(-49, 37))


def test_coordinate_fields_commute():
    M = heisenberg()
    x, y, u = M.coords
    dx = CoordVectorField(M.coords, {x: 1})
    du = CoordVectorField(M.coords, {u: 1})
    assert coord_bracket(dx, du) == CoordVectorField(M.coords)


# rank and classification

def test_rank_examples():
    M = heisenberg()
    (L,) = build_generators(M)
    fields = [L, L.conj(), coord_bracket(L, L.conj())]
    assert rank_at_point(fields, M.point_values([0, 0, 0, 0])) == 3
    F = hypersurface("C2", "0")
    (L,) = build_generators(F)
    assert rank_at_point([L, L.conj(), coord_bracket(L, L.conj())], F.point_values([0, 0, 0])) == 2
    with pytest.raises(PointNotOnM):
        M.point_values([1, 1, 0, 0])


def test_pole_at_point():
    M = hypersurface("C2", "I*u")  # complex coefficient: i + phi_u = 2i, no pole
    f = RationalFunc(StarPoly.constant(1), M.phi)
    with pytest.raises(PoleAtPoint):
        f.evaluate(M.point_values([0, 0, 0]))


def test_classify_examples():
    assert classify_point(heisenberg(), [0, 0, 0, 0]).verdict == "ClassI"
    assert classify_point(hypersurface("C2", "0"), [1, 2, 3]).verdict == "Degenerate"
    v = classify_point(hypersurface("C3", "x1^2 + y1^2 + x2^2 + y2^2"), [0, 0, 0, 0, 0, 0])
    assert v.verdict == "ClassIV1"
    assert v.details["normalized"] == [["1", "0"], ["0", "1"]]
    v = classify_point(hypersurface("C3", "x1^2 + y1^2"), [0, 0, 0, 0, 0])
    assert v.verdict == "ClassIV2-candidate" and "caveat" in v.details
    assert classify_point(hypersurface("C3", "0"), [0, 0, 0, 0, 0]).verdict == "Degenerate"


def test_levi_matrix_hermitian():
    M = hypersurface("C3", "x1^2*u + y2^2 + x1*x2 + y1*u^2")
    L1, L2 = build_generators(M)
    ell = levi_matrix(L1, L2, M.point_values([1, 2, -1, 1, 2]), M.u)
    assert ell[0][1] == ell[1][0].conj()
    assert ell[0][0].is_real() and ell[1][1].is_real()


# multiplier

def test_multiplier_examples():
    M = heisenberg()
    ident = HoloMap.from_strings("z'", "w'")
    r = multiplier_at(ident, M, M, [1, 2, 3, 5])
    assert r.a == 1 and r.residual == 0
    lam = GaussRat(2, -1)
    h = HoloMap.from_strings("(2 - I)*z'", "5*w'")
    r = multiplier_at(h, M, M, [1, 2, 3, 5])
    assert r.a == lam and r.residual == 0 and r.on_source
    h = HoloMap.from_strings("z'^2", "w'")
    with pytest.raises(ZeroDenominator):
        multiplier_at(h, M, M, [0, 0, 3, 0])
    with pytest.raises(PointNotOnM):
        multiplier_at(ident, M, M, [0, 0, 3, 1])


def test_multiplier_detects_wrong_map():
    M = heisenberg()
    h = HoloMap.from_strings("2*z'", "w'")
    r = multiplier_at(h, M, M, [1, 1, 0, 2])
    assert r.a == 2 and not r.on_source


def test_multiplier_nonlinear_automorphism():
    # z = z' + w'... not polynomial automorphisms; use the Heisenberg translation
    # (z, w) = (z' + 1, w' + 2i z' + i) maps v = |z|^2 to itself
    M = heisenberg()
    h = HoloMap.from_strings("z' + 1", "w' + 2*I*z' + I")
    r = multiplier_at(h, M, M, on_graph(M, [Fraction(1, 3), 2, 7]))
    assert r.on_source and r.residual == 0 and r.a == 1


# file formats

def test_load_hypersurface_and_map():
    M = hl.load_hypersurface("# heisenberg\nambient C2\nphi = x^2 + y^2\n")
    assert M.phi == heisenberg().phi
    h = hl.load_map("z -> 2*z'\nw -> 4*w'\n")
    assert h.w == StarPoly.symbol(HoloMap.WP).scale(GaussRat(4))
    with pytest.raises(hl.HypersurfaceFormatError) as exc:
        hl.load_hypersurface("ambient C2\nphi = x +\n")
    assert exc.value.line == 2 and exc.value.column == 10
    with pytest.raises(hl.HypersurfaceFormatError):
        hl.load_hypersurface("ambient C4\nphi = 0\n")
    with pytest.raises(hl.HypersurfaceFormatError):
        hl.load_hypersurface("ambient C2\nphi = v\n")
    with pytest.raises(hl.HypersurfaceFormatError):
        hl.load_map("z -> conj(z')\nw -> w'\n")


def test_parse_point():
    assert hl.parse_point("1/2, -3,0") == [Fraction(1, 2), -3, 0]
    with pytest.raises(ValueError):
        hl.parse_point("1,x")


# properties

coord = st.fractions(min_value=-3, max_value=3, max_denominator=4)
C2_PHIS = [
    "x^2 + y^2",
    "0",
    "x^2 + y^2 + u*x^2",
    "x^3 + y^2*u",
    "x*y + u^2",
    "x^4 + y^4 + u*x*y",
]
C3_PHIS = [
    "x1^2 + y1^2 + x2^2 + y2^2",
    "x1^2 + y1^2",
    "x1^2 + y1^2 - x2^2 - y2^2 + u*x1",
    "x1*x2 + y1^2*u",
]
MULTIPLIERS = ["1 + x^2", "2 + I*y + u^2", "x - 3", "1 + x*y*u"]


@given(st.sampled_from(C2_PHIS), st.sampled_from(MULTIPLIERS), coord, coord, coord)
@settings(max_examples=60)
def test_rank_invariant_under_rescaling(phi, f_text, x, y, u):
    M = hypersurface("C2", phi)
    q = M.point_values(on_graph(M, [x, y, u]))
    f = rf(M, f_text)
    assume(f.evaluate(q) != 0)
    (L,) = build_generators(M)
    fL = L.scale(f)
    r1 = rank_at_point([L, L.conj(), coord_bracket(L, L.conj())], q)
    r2 = rank_at_point([fL, fL.conj(), coord_bracket(fL, fL.conj())], q)
    assert r1 == r2


@given(
    st.sampled_from(C3_PHIS),
    st.lists(coord, min_size=5, max_size=5),
    st.lists(st.integers(-3, 3), min_size=4, max_size=4),
)
@settings(max_examples=60)
def test_levi_verdict_invariant_under_constant_gl2(phi, pt, m):
    a, b, c, d = (GaussRat(k) for k in m)
    assume(a * d - b * c != 0)
    M = hypersurface("C3", phi)
    q = M.point_values(pt)
    L1, L2 = build_generators(M)
    K1 = L1.scale(RationalFunc(a)) + L2.scale(RationalFunc(b))
    K2 = L1.scale(RationalFunc(c)) + L2.scale(RationalFunc(d))
    assert classify_point(M, q).verdict == classify_point(M, q, generators=[K1, K2]).verdict


@given(st.sampled_from(C2_PHIS), coord, coord, coord)
@settings(max_examples=50)
def test_identity_multiplier(phi, x, y, u):
    M = hypersurface("C2", phi)
    r = multiplier_at(HoloMap.from_strings("z'", "w'"), M, M, on_graph(M, [x, y, u]))
    assert r.a == 1 and r.residual == 0


POLY_COMPONENTS = ["x", "y*u", "1", "x^2 - u", "I*y", "0", "x*y"]


@st.composite
def poly_fields(draw):
    M = heisenberg()
    return CoordVectorField(M.coords, {c: rf(M, draw(st.sampled_from(POLY_COMPONENTS))) for c in M.coords})


@given(poly_fields(), poly_fields(), poly_fields())
@settings(max_examples=100)
def test_coord_bracket_jacobi(X, Y, Z):
    total = (
        coord_bracket(X, coord_bracket(Y, Z))
        + coord_bracket(Y, coord_bracket(Z, X))
        + coord_bracket(Z, coord_bracket(X, Y))
    )
    assert total == CoordVectorField(X.coords)
    assert coord_bracket(X, Y) == -coord_bracket(Y, X)
