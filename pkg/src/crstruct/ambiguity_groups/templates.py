"""The six parametric matrix groups and their symbol conventions."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

from ..matrix_algebra import RingMatrix
from ..scalar_kernel import StarPoly, Symbol, UnitFraction, derived_unit, parse_expr

KINDS = ("complex-free", "complex-unit", "real-unit", "real-free")


@dataclass(frozen=True)
class ParamSpec:
    name: str
    kind: str

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown parameter kind {self.kind!r}")

    @property
    def unit(self) -> bool:
        return self.kind.endswith("-unit")

    @property
    def real(self) -> bool:
        return self.kind.startswith("real")

    def symbol(self, suffix: str = "") -> Symbol:
        return Symbol(suffixed(self.name, suffix), unit=self.unit, real=self.real)


def suffixed(name: str, suffix: str) -> str:
    if not suffix:
        return name
    sep = "_" if name[-1].isdigit() and suffix[0].isdigit() else ""
    return f"{name}{sep}{suffix}"


@dataclass(frozen=True)
class GroupTemplate:
    """A parametric embedding given by expression strings in the parameters.

    ``derived_units`` lists ``(name, expression)`` pairs for polynomials in the
    parameters that are nonvanishing on the group (the IV1 block determinant).
    ``identity`` overrides the default identity values (units 1, free 0).
    """

    id: str
    params: tuple[ParamSpec, ...]
    entries: tuple[tuple[str, ...], ...]
    expected_real_dim: int
    frame: tuple[str, ...] = ()
    derived_units: tuple[tuple[str, str], ...] = ()
    identity: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.entries)

    def param(self, name: str) -> ParamSpec:
        for p in self.params:
            if p.name == name:
                return p
        raise KeyError(name)

    @property
    def names(self) -> list[str]:
        return [p.name for p in self.params]

    def symbols(self, suffix: str = "") -> dict[str, Symbol]:
        return {p.name: p.symbol(suffix) for p in self.params}

    def generic(self, suffix: str = "") -> dict[str, UnitFraction]:
        """Assignment sending each parameter to a fresh symbol."""
        return {name: UnitFraction(StarPoly.symbol(s)) for name, s in self.symbols(suffix).items()}

    def identity_params(self) -> dict[str, UnitFraction]:
        out = {}
        for p in self.params:
            default = 1 if p.unit else 0
            out[p.name] = UnitFraction.lift(self.identity.get(p.name, default))
        return out

    def template_matrix(self) -> RingMatrix:
        """The embedding with the unsuffixed parameter symbols."""
        table = self.symbols()
        return RingMatrix(
            [[parse_expr(x, symbols=table) for x in row] for row in self.entries]
        )

    def positions(self) -> dict[str, tuple[int, int]]:
        """Where each parameter can be read off: the first entry equal to it."""
        out = {}
        for i, row in enumerate(self.entries):
            for j, x in enumerate(row):
                x = x.strip()
                if x in self.names and x not in out:
                    out[x] = (i, j)
        missing = [p for p in self.names if p not in out]
        if missing:
            raise ValueError(f"template {self.id}: no bare position for {missing}")
        return out

    def units_for(self, assignment: dict) -> tuple[Symbol, ...]:
        """Derived unit symbols (and conjugates) for a symbolic assignment."""
        out = []
        table = self.symbols()
        for name, expr in self.derived_units:
            template = parse_expr(expr, symbols=table)
            definition = template.subs(_conj_closed(table, assignment))
            if definition.denominator:
                raise ValueError(f"derived unit {name} is not polynomial")
            sym = derived_unit(_derived_name(name, self, assignment, definition), definition.numerator)
            out.extend([sym, sym.conj()])
        return tuple(out)


def _derived_name(name: str, t: GroupTemplate, assignment: dict, definition: UnitFraction) -> str:
    # readable name when the assignment is generic; otherwise a content hash
    suffixes = set()
    for p in t.params:
        v = assignment[p.name]
        syms = v.numerator.symbols() if not v.denominator else set()
        if len(v.numerator) != 1 or len(syms) != 1:
            suffixes = None
            break
        (s,) = syms
        if not s.name.startswith(p.name) or s.conjugated:
            suffixes = None
            break
        suffixes.add(s.name[len(p.name):].lstrip("_"))
    if suffixes is not None and len(suffixes) == 1:
        return suffixed(name, suffixes.pop())
    digest = hashlib.sha1(definition.to_expr().encode()).hexdigest()[:8]
    return f"{name}_{digest}"


def _conj_closed(table: dict[str, Symbol], assignment: dict) -> dict:
    mapping = {}
    for name, sym in table.items():
        v = UnitFraction.lift(assignment[name])
        mapping[sym] = v
        if not sym.real:
            mapping[sym.conj()] = v.conj()
    return mapping


def _p(spec: str) -> tuple[ParamSpec, ...]:
    out = []
    for item in spec.split():
        name, kind = item.split(":")
        out.append(ParamSpec(name, kind))
    return tuple(out)


def _m(text: str) -> tuple[tuple[str, ...], ...]:
    return tuple(tuple(x.strip() for x in row.split(";")) for row in text.strip().splitlines())


G_I = GroupTemplate(
    "I",
    _p("a:complex-unit b:complex-free"),
    _m("""
        a ; 0 ; 0
        0 ; conj(a) ; 0
        b ; conj(b) ; a*conj(a)
    """),
    4,
    frame=("L", "Lbar", "T"),
)

G_II = GroupTemplate(
    "II",
    _p("a:complex-unit b:complex-free c:complex-free d:complex-free e:complex-free"),
    _m("""
        a ; 0 ; 0 ; 0
        0 ; conj(a) ; 0 ; 0
        b ; conj(b) ; a*conj(a) ; 0
        e ; d ; c ; a*a*conj(a)
    """),
    10,
    frame=("L", "Lbar", "T", "S"),
)

G_III1 = GroupTemplate(
    "III1",
    _p("a:complex-unit b:complex-free c:complex-free d:complex-free e:complex-free"),
    _m("""
        a ; 0 ; 0 ; 0 ; 0
        0 ; conj(a) ; 0 ; 0 ; 0
        b ; conj(b) ; a*conj(a) ; 0 ; 0
        e ; d ; c ; a*a*conj(a) ; 0
        conj(d) ; conj(e) ; conj(c) ; 0 ; a*conj(a)*conj(a)
    """),
    10,
    frame=("L", "Lbar", "T", "S", "Sbar"),
)

G_III2 = GroupTemplate(
    "III2",
    _p(
        "a:complex-unit b:complex-free c:complex-free d:complex-free e:complex-free "
        "f:complex-free g:complex-free h:complex-free k:complex-free"
    ),
    _m("""
        a ; 0 ; 0 ; 0 ; 0
        0 ; conj(a) ; 0 ; 0 ; 0
        b ; conj(b) ; a*conj(a) ; 0 ; 0
        e ; d ; c ; a*a*conj(a) ; 0
        k ; h ; g ; f ; a*a*a*conj(a)
    """),
    18,
    frame=("L", "Lbar", "T", "S", "R"),
)

G_IV1 = GroupTemplate(
    "IV1",
    _p(
        "a11:complex-free a12:complex-free a21:complex-free a22:complex-free "
        "b1:complex-free b2:complex-free c:real-unit"
    ),
    _m("""
        a11 ; a21 ; 0 ; 0 ; 0
        a12 ; a22 ; 0 ; 0 ; 0
        0 ; 0 ; conj(a11) ; conj(a21) ; 0
        0 ; 0 ; conj(a12) ; conj(a22) ; 0
        b1 ; b2 ; conj(b1) ; conj(b2) ; c
    """),
    13,
    frame=("L1", "L2", "L1bar", "L2bar", "T"),
    derived_units=(("Delta", "a11*a22 - a12*a21"),),
    identity={"a11": 1, "a22": 1},
)

G_IV2 = GroupTemplate(
    "IV2",
    _p("c:complex-unit a:complex-unit b:complex-free d:complex-free e:complex-free"),
    _m("""
        c ; 0 ; 0 ; 0 ; 0
        b ; a ; 0 ; 0 ; 0
        0 ; 0 ; conj(c) ; 0 ; 0
        0 ; 0 ; conj(b) ; conj(a) ; 0
        e ; d ; conj(e) ; conj(d) ; a*conj(a)
    """),
    10,
    frame=("K", "L1", "Kbar", "L1bar", "T"),
)

TEMPLATES: dict[str, GroupTemplate] = {
    t.id: t for t in (G_I, G_II, G_III1, G_III2, G_IV1, G_IV2)
}


def get_template(group_id: str) -> GroupTemplate:
    try:
        return TEMPLATES[group_id]
    except KeyError:
        raise KeyError(f"unknown group {group_id!r}; choose from {', '.join(TEMPLATES)}") from None
