"""Square matrices over the localized scalar ring."""

from __future__ import annotations

import json
from typing import Mapping, Sequence

from .scalar_kernel import GaussRat, NotAUnit, UnitFraction, frac_inv, parse_expr, substitute


class DimensionMismatch(ValueError):
    pass


class NotInvertibleInRing(ArithmeticError):
    pass


class RingMatrix:
    """An immutable n x n matrix of :class:`UnitFraction` entries."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        rows = tuple(tuple(UnitFraction.lift(x) for x in row) for row in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise DimensionMismatch("matrix must be square and fully populated")
        self.rows = rows

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, RingMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"RingMatrix({self.to_strings()})"

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __sub__(self, other):
        _check(self, other)
        return RingMatrix([[x - y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __add__(self, other):
        _check(self, other)
        return RingMatrix([[x + y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def scale(self, c) -> RingMatrix:
        c = UnitFraction.lift(c)
        return RingMatrix([[c * x for x in r] for r in self.rows])

    def conj(self) -> RingMatrix:
        return RingMatrix([[x.conj() for x in r] for r in self.rows])

    def map(self, fn) -> RingMatrix:
        return RingMatrix([[fn(x) for x in r] for r in self.rows])

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self.rows for x in r)

    def nonzero_entries(self) -> list[tuple[int, int, UnitFraction]]:
        return [(i, j, x) for i, r in enumerate(self.rows) for j, x in enumerate(r) if x]

    def to_strings(self) -> list[list[str]]:
        return [[x.to_expr() for x in r] for r in self.rows]

    def to_json(self) -> str:
        return json.dumps(self.to_strings())

    @classmethod
    def from_strings(cls, rows, units=(), reals=(), symbols=None) -> RingMatrix:
        return cls([[parse_expr(x, units, reals, symbols) for x in r] for r in rows])

    @classmethod
    def from_json(cls, text: str, units=(), reals=(), symbols=None) -> RingMatrix:
        return cls.from_strings(json.loads(text), units, reals, symbols)


def _check(A: RingMatrix, B: RingMatrix):
    if A.n != B.n:
        raise DimensionMismatch(f"{A.n}x{A.n} vs {B.n}x{B.n}")


def identity(n: int) -> RingMatrix:
    return RingMatrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])


def mat_mul(A: RingMatrix, B: RingMatrix) -> RingMatrix:
    _check(A, B)
    n = A.n
    cols = [[B.rows[k][j] for k in range(n)] for j in range(n)]
    out = []
    for row in A.rows:
        out_row = []
        for col in cols:
            acc = UnitFraction(0)
            for x, y in zip(row, col):
                if x and y:
                    acc = acc + x * y
            out_row.append(acc)
        out.append(out_row)
    return RingMatrix(out)


def _det(rows, cols: tuple, col_set: frozenset, row: int, memo: dict):
    # Laplace expansion along successive rows; memoized on remaining columns
    if row == len(rows):
        return UnitFraction(1)
    key = col_set
    if key in memo:
        return memo[key]
    acc = UnitFraction(0)
    sign = 1
    for j in cols:
        if j not in col_set:
            continue
        x = rows[row][j]
        if x:
            minor = _det(rows, cols, col_set - {j}, row + 1, memo)
            if minor:
                term = x * minor
                acc = acc + term if sign > 0 else acc - term
        sign = -sign
    memo[key] = acc
    return acc


def mat_det(A: RingMatrix) -> UnitFraction:
    cols = tuple(range(A.n))
    return _det(A.rows, cols, frozenset(cols), 0, {})


def _minor_rows(A: RingMatrix, i: int, j: int):
    return [[x for c, x in enumerate(r) if c != j] for k, r in enumerate(A.rows) if k != i]


def adjugate(A: RingMatrix) -> RingMatrix:
    n = A.n
    if n == 1:
        return identity(1)
    cof = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            m = RingMatrix(_minor_rows(A, i, j))
            d = mat_det(m)
            cof[j][i] = d if (i + j) % 2 == 0 else -d
    return RingMatrix(cof)


def mat_inverse(A: RingMatrix, units=()) -> RingMatrix:
    """Inverse as adjugate / det.  ``units`` lists derived units usable for det."""
    det = mat_det(A)
    try:
        inv_det = frac_inv(det, units)
    except NotAUnit as exc:
        raise NotInvertibleInRing(f"determinant {det.to_expr()} is not a unit") from exc
    return adjugate(A).scale(inv_det)


def mat_substitute(A: RingMatrix, binding: Mapping) -> list[list[GaussRat]]:
    return [[substitute(x, binding) for x in r] for r in A.rows]


def numeric_mul(A: Sequence[Sequence[GaussRat]], B: Sequence[Sequence[GaussRat]]):
    n = len(A)
    if len(B) != n:
        raise DimensionMismatch(f"{n} vs {len(B)}")
    return [
        [sum((A[i][k] * B[k][j] for k in range(n)), GaussRat(0)) for j in range(n)]
        for i in range(n)
    ]
