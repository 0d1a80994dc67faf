"""Formal vector fields over an abstract frame and their Lie brackets."""

from __future__ import annotations

from typing import Mapping

from ..scalar_kernel import GaussRat, StarPoly
from .atoms import Frame, derive


class UntabulatedBracket(KeyError):
    def __init__(self, x: Frame, y: Frame):
        super().__init__(f"[{x.name},{y.name}]")
        self.pair = (x, y)

    def __str__(self):
        return f"bracket [{self.pair[0].name},{self.pair[1].name}] is not tabulated"


class VectorExpr:
    """A finite combination ``sum f_X * X`` with polynomial coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[Frame, StarPoly] | None = None):
        self.coeffs = {f: StarPoly._lift(c) for f, c in (coeffs or {}).items() if c}

    @classmethod
    def of(cls, frame: Frame, coeff=1) -> VectorExpr:
        return cls({frame: StarPoly._lift(coeff)})

    def __getitem__(self, frame: Frame) -> StarPoly:
        return self.coeffs.get(frame, StarPoly())

    def frames(self):
        return self.coeffs.keys()

    def items(self):
        return self.coeffs.items()

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        return isinstance(other, VectorExpr) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        return f"VectorExpr({self.to_expr()})"

    def __str__(self):
        return self.to_expr()

    def to_expr(self, order=None) -> str:
        if not self.coeffs:
            return "0"
        frames = list(self.coeffs)
        if order is not None:
            rank = {f: i for i, f in enumerate(order)}
            frames.sort(key=lambda f: (rank.get(f, len(rank)), f.name))
        else:
            frames.sort(key=lambda f: f.name)
        parts = []
        for f in frames:
            c = self.coeffs[f]
            if c == 1:
                parts.append(f.name)
            elif c == -1:
                parts.append(f"-{f.name}")
            elif len(c) == 1 and not c.to_expr().startswith("("):
                parts.append(f"{c.to_expr()}*{f.name}")
            else:
                parts.append(f"({c.to_expr()})*{f.name}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, VectorExpr):
            return NotImplemented
        out = dict(self.coeffs)
        for f, c in other.coeffs.items():
            out[f] = out.get(f, StarPoly()) + c
        return VectorExpr(out)

    __radd__ = __add__

    def __neg__(self):
        return VectorExpr({f: -c for f, c in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, VectorExpr):
            return NotImplemented
        return self + (-other)

    def scale(self, s) -> VectorExpr:
        s = StarPoly._lift(s)
        return VectorExpr({f: s * c for f, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (StarPoly, int, GaussRat)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def conj(self) -> VectorExpr:
        return VectorExpr({f.conj(): c.conj() for f, c in self.coeffs.items()})

    def apply(self, p: StarPoly) -> StarPoly:
        """The vector field acting as a derivation on a coefficient polynomial."""
        out = StarPoly()
        for f, c in self.coeffs.items():
            out = out + c * derive(f, p)
        return out

    def map_coeffs(self, fn) -> VectorExpr:
        return VectorExpr({f: fn(c) for f, c in self.coeffs.items()})


def vf_conj(X: VectorExpr) -> VectorExpr:
    return X.conj()


def vf_bracket(X: VectorExpr, Y: VectorExpr, table) -> VectorExpr:
    """[sum f X_i, sum g Y_j] = sum (f g [X_i,Y_j] + f X_i(g) Y_j - g Y_j(f) X_i)."""
    out = VectorExpr()
    for fx, f in X.items():
        for gy, g in Y.items():
            if fx != gy:
                out = out + table.bracket(fx, gy).scale(f * g)
            xg = derive(fx, g)
            if xg:
                out = out + VectorExpr.of(gy, f * xg)
            yf = derive(gy, f)
            if yf:
                out = out - VectorExpr.of(fx, g * yf)
    return out
