"""Ring variables closed under formal conjugation.

Any object used as a polynomial variable must provide ``conj()``, ``unit``,
``real``, ``definition``, ``sort_key`` and ``to_expr()``.  :class:`Symbol` is
the plain implementation; ``frame_calculus`` supplies derivation atoms.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Any


@dataclass(frozen=True, slots=True)
class Symbol:
    """A named ring variable.

    ``conj(a)`` is an independent variable linked to ``a`` only through
    :meth:`conj`.  A real symbol is its own conjugate.  A unit symbol may appear
    in denominators.  A derived unit additionally carries the polynomial it
    abbreviates (e.g. a 2x2 determinant); ``definition`` does not take part in
    equality, so give derived units distinct names.
    """

    name: str
    conjugated: bool = False
    unit: bool = False
    real: bool = False
    definition: Any = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if self.real and self.conjugated:
            raise ValueError(f"real symbol {self.name!r} cannot be conjugated")

    def conj(self) -> Symbol:
        if self.real:
            return self
        definition = None if self.definition is None else self.definition.conj()
        return replace(self, conjugated=not self.conjugated, definition=definition)

    @property
    def base(self) -> Symbol:
        return self.conj() if self.conjugated else self

    @property
    def sort_key(self) -> tuple:
        # units first, then alphabetical, conjugate right after its base
        return (0 if self.unit else 1, self.name, (), self.conjugated)

    def to_expr(self) -> str:
        return f"conj({self.name})" if self.conjugated else self.name

    def __str__(self):
        return self.to_expr()


def derived_unit(name: str, definition) -> Symbol:
    """A unit symbol standing for the (nonvanishing) polynomial ``definition``."""
    return Symbol(name, unit=True, definition=definition)
