from fractions import Fraction

from hypothesis import strategies as st

from crstruct.scalar_kernel import GaussRat, StarPoly, Symbol

A = Symbol("a", unit=True)
B = Symbol("b")
C = Symbol("c")
BASE = (A, B, C)
ALL = BASE + tuple(s.conj() for s in BASE)

small = st.fractions(min_value=-4, max_value=4, max_denominator=3)
gaussrats = st.builds(GaussRat, small, small)
nonzero_gaussrats = gaussrats.filter(bool)


@st.composite
def monomials(draw, syms=ALL, max_deg=2):
    out = StarPoly.constant(1)
    for s in syms:
        e = draw(st.integers(0, max_deg))
        if e:
            out = out * StarPoly.symbol(s) ** e
    return out


@st.composite
def polys(draw, syms=ALL, max_terms=4):
    n = draw(st.integers(0, max_terms))
    out = StarPoly()
    for _ in range(n):
        out = out + draw(monomials(syms)).scale(draw(nonzero_gaussrats))
    return out


@st.composite
def bindings(draw):
    """Conjugation-consistent values with the unit a nonzero."""
    out = {}
    for s in BASE:
        v = draw(nonzero_gaussrats if s.unit else gaussrats)
        out[s] = v
        out[s.conj()] = v.conj()
    return out


def q(x):
    return Fraction(x)
