"""Tangent Lie algebras at the identity and their real dimensions."""

from __future__ import annotations

from .._elimination import rank
from ..scalar_kernel import GaussRat, substitute
from .templates import GroupTemplate

Matrix = list  # n x n nested lists of GaussRat


def lie_algebra_basis(t: GroupTemplate) -> list[tuple[str, Matrix]]:
    """One derivative matrix per real degree of freedom, labelled.

    For a complex parameter s the two real directions are
    d/d(Re s) = d_s + d_conj(s) and d/d(Im s) = i d_s - i d_conj(s).
    """
    M = t.template_matrix()
    syms = t.symbols()
    at_identity = {syms[name]: v.numerator.constant_value() for name, v in t.identity_params().items()}
    out = []
    for spec in t.params:
        s = syms[spec.name]
        ds = [[substitute(x.diff(s), at_identity) for x in row] for row in M.rows]
        if spec.real:
            out.append((spec.name, ds))
            continue
        dc = [[substitute(x.diff(s.conj()), at_identity) for x in row] for row in M.rows]
        i = GaussRat(0, 1)
        out.append((f"Re({spec.name})", _combine(ds, dc, GaussRat(1), GaussRat(1))))
        out.append((f"Im({spec.name})", _combine(ds, dc, i, -i)))
    return out


def _combine(A, B, x, y):
    return [[x * p + y * q for p, q in zip(ra, rb)] for ra, rb in zip(A, B)]


def _flatten(m: Matrix) -> list:
    out = []
    for row in m:
        for x in row:
            out.extend((x.re, x.im))
    return out


def _matrices(basis):
    return [b[1] if isinstance(b, tuple) else b for b in basis]


def lie_dimension(basis) -> int:
    """Rank over Q of the real coordinates of the basis matrices."""
    mats = _matrices(basis)
    if not mats:
        return 0
    return rank([_flatten(m) for m in mats])


def commutator(X: Matrix, Y: Matrix) -> Matrix:
    n = len(X)
    zero = GaussRat(0)
    xy = [[sum((X[i][k] * Y[k][j] for k in range(n)), zero) for j in range(n)] for i in range(n)]
    yx = [[sum((Y[i][k] * X[k][j] for k in range(n)), zero) for j in range(n)] for i in range(n)]
    return [[p - q for p, q in zip(r, s)] for r, s in zip(xy, yx)]


def verify_lie_closure(basis) -> bool:
    mats = _matrices(basis)
    rows = [_flatten(m) for m in mats]
    r = rank(rows)
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            c = _flatten(commutator(mats[i], mats[j]))
            if any(c) and rank(rows + [c]) != r:
                return False
    return True
