"""Frame fields and function atoms with opaque derivation prefixes."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..scalar_kernel import StarPoly
from ..scalar_kernel.poly import Monomial


@dataclass(frozen=True, slots=True)
class Frame:
    """An abstract frame field.  ``Xbar`` is the conjugate of ``X``."""

    name: str
    real: bool = field(default=False, compare=False)

    def conj(self) -> Frame:
        if self.real:
            return self
        if self.name.endswith("bar"):
            return Frame(self.name[:-3])
        return Frame(self.name + "bar")

    def __str__(self):
        return self.name


@dataclass(frozen=True, slots=True)
class FuncAtom:
    """``X1(X2(...(f)))`` for a base function ``f`` (or its conjugate).

    ``prefix`` lists the applied frame fields outermost first.  Atoms with
    different prefixes are independent ring variables: no commutation of
    derivations is ever assumed.
    """

    base: str
    prefix: tuple[Frame, ...] = ()
    conjugated: bool = False
    base_unit: bool = False
    base_real: bool = False

    def __post_init__(self):
        if self.base_real and self.conjugated:
            raise ValueError(f"real function {self.base!r} cannot be conjugated")

    @property
    def unit(self) -> bool:
        return self.base_unit and not self.prefix

    @property
    def real(self) -> bool:
        return self.base_real and all(f.real for f in self.prefix)

    @property
    def definition(self):
        return None

    @property
    def sort_key(self) -> tuple:
        return (0 if self.unit else 1, self.base, tuple(f.name for f in self.prefix), self.conjugated)

    def conj(self) -> FuncAtom:
        if self.real:
            return self
        return FuncAtom(
            self.base,
            tuple(f.conj() for f in self.prefix),
            (not self.conjugated) if not self.base_real else False,
            self.base_unit,
            self.base_real,
        )

    def apply(self, frame: Frame) -> FuncAtom:
        return FuncAtom(self.base, (frame,) + self.prefix, self.conjugated, self.base_unit, self.base_real)

    def to_expr(self) -> str:
        out = f"conj({self.base})" if self.conjugated else self.base
        for f in reversed(self.prefix):
            out = f"{f.name}({out})"
        return out

    def __str__(self):
        return self.to_expr()


def atom(name: str, unit: bool = False, real: bool = False) -> StarPoly:
    return StarPoly.symbol(FuncAtom(name, base_unit=unit, base_real=real))


def derive(frame: Frame, p: StarPoly) -> StarPoly:
    """Apply the derivation ``frame`` to ``p`` by the Leibniz rule."""
    out = StarPoly()
    for m, c in p.items():
        for s, e in m.factors:
            if not isinstance(s, FuncAtom):
                raise TypeError(f"cannot differentiate symbol {s!r}")
            rest = m.as_dict()
            rest[s] = e - 1
            term = StarPoly.monomial(Monomial.from_dict(rest), c * e)
            out = out + term * StarPoly.symbol(s.apply(frame))
    return out
