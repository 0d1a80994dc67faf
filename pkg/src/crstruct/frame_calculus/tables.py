"""Bracket tables, transfer rules and the declarative class format.

Line format (one directive per line, ``#`` starts a comment)::

    frame     <class> <X> <Y> ...          frame order, also the matrix order
    realframe <class> <X> ...              self-conjugate frame fields
    units     <class> <f> ...              nowhere-vanishing functions
    reals     <class> <f> ...              real-valued functions
    bracket   <class> [X,Y] = <expr>       optionally scaled: I*[X,Y] = <expr>
    transfer  <class> X' = <expr>
    step      <class> X' = <coef>*[Y',Z'] names F:f G:g ...

Expressions use the scalar grammar; frame names denote fields and
``X(f)`` applies the field X to the function f.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources

from ..scalar_kernel import GaussRat, StarPoly
from ..scalar_kernel.parser import Parser
from .atoms import Frame, FuncAtom, derive
from .vector import UntabulatedBracket, VectorExpr


class InconsistentTable(ValueError):
    pass


class TableFormatError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class BracketTable:
    """Brackets of frame fields, closed under antisymmetry and conjugation."""

    def __init__(self, class_id: str):
        self.class_id = class_id
        self.entries: dict[tuple[Frame, Frame], VectorExpr] = {}

    def set(self, x: Frame, y: Frame, value: VectorExpr):
        cx, cy, cv = x.conj(), y.conj(), value.conj()
        for a, b, v in ((x, y, value), (y, x, -value), (cx, cy, cv), (cy, cx, -cv)):
            self._put(a, b, v)

    def _put(self, x: Frame, y: Frame, v: VectorExpr):
        if x == y:
            if v:
                raise InconsistentTable(f"[{x},{x}] must vanish, got {v}")
            return
        old = self.entries.get((x, y))
        if old is not None and old != v:
            raise InconsistentTable(
                f"class {self.class_id}: [{x},{y}] given as {old} and as {v}"
            )
        self.entries[(x, y)] = v

    def bracket(self, x: Frame, y: Frame) -> VectorExpr:
        if x == y:
            return VectorExpr()
        try:
            return self.entries[(x, y)]
        except KeyError:
            raise UntabulatedBracket(x, y) from None

    def pairs(self):
        return list(self.entries)


@dataclass
class Step:
    target: Frame
    coeff: StarPoly
    left: Frame
    right: Frame
    names: dict[Frame, str] = field(default_factory=dict)


@dataclass
class TransferRule:
    class_id: str
    images: dict[Frame, VectorExpr] = field(default_factory=dict)


@dataclass
class ClassSpec:
    id: str
    frames: list[Frame] = field(default_factory=list)
    units: set[str] = field(default_factory=set)
    reals: set[str] = field(default_factory=set)
    table: BracketTable = None
    transfer: TransferRule = None
    steps: list[Step] = field(default_factory=list)

    def frame(self, name: str) -> Frame:
        for f in self.frames:
            if f.name == name:
                return f
        return Frame(name)

    def frame_names(self) -> set[str]:
        return {f.name for f in self.frames}

    def parser(self, text: str, extra_reals=()) -> Parser:
        names = self.frame_names()
        reals = set(self.reals) | set(extra_reals)

        def make_symbol(name: str):
            if name in names:
                return VectorExpr.of(self.frame(name))
            return StarPoly.symbol(
                FuncAtom(name, base_unit=name in self.units, base_real=name in reals)
            )

        def call(name: str, arg):
            if name not in names:
                raise KeyError(name)
            if not isinstance(arg, StarPoly):
                raise TypeError(f"{name}(...) needs a function argument")
            return derive(self.frame(name), arg)

        return Parser(text, make_symbol, StarPoly.constant, call)

    def parse(self, text: str, extra_reals=()):
        return self.parser(text, extra_reals).parse()


_BRACKET = re.compile(r"^(?P<coef>.*?)\[\s*(?P<x>\w+)\s*,\s*(?P<y>\w+)\s*\]\s*=\s*(?P<rhs>.+)$")
_TRANSFER = re.compile(r"^(?P<x>\w+)'\s*=\s*(?P<rhs>.+)$")
_STEP = re.compile(
    r"^(?P<t>\w+)'\s*=\s*(?P<coef>.*?)\[\s*(?P<x>\w+)'\s*,\s*(?P<y>\w+)'\s*\]"
    r"\s*(?:names\s+(?P<names>.*))?$"
)


def _as_vector(value, line: int) -> VectorExpr:
    if isinstance(value, VectorExpr):
        return value
    if isinstance(value, StarPoly) and value.is_zero():
        return VectorExpr()
    raise TableFormatError("right-hand side must be a combination of frame fields", line)


def _scalar_coef(spec: ClassSpec, text: str, line: int) -> GaussRat:
    text = text.strip().rstrip("*").strip()
    if not text:
        return GaussRat(1)
    if text == "-":
        return GaussRat(-1)
    value = spec.parse(text)
    if not isinstance(value, StarPoly) or not value.is_constant():
        raise TableFormatError(f"bracket scale {text!r} must be a constant", line)
    c = value.constant_value()
    if not c:
        raise TableFormatError("bracket scale must be nonzero", line)
    return c


def load_classes(text: str) -> dict[str, ClassSpec]:
    """Parse the declarative format into class specifications."""
    classes: dict[str, ClassSpec] = {}
    pending: dict[str, list] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split(None, 2)
        if len(parts) < 3:
            raise TableFormatError(f"incomplete directive {line!r}", lineno)
        kind, cid, rest = parts
        spec = classes.setdefault(cid, ClassSpec(cid, table=BracketTable(cid), transfer=TransferRule(cid)))
        if kind == "frame":
            spec.frames = [Frame(n) for n in rest.split()]
        elif kind == "realframe":
            real = set(rest.split())
            spec.frames = [Frame(f.name, f.name in real) for f in spec.frames]
        elif kind == "units":
            spec.units |= set(rest.split())
        elif kind == "reals":
            spec.reals |= set(rest.split())
        elif kind in ("bracket", "transfer", "step"):
            pending.setdefault(cid, []).append((kind, rest, lineno))
        else:
            raise TableFormatError(f"unknown directive {kind!r}", lineno)
    # expressions are read once all declarations of a class are known
    for cid, items in pending.items():
        spec = classes[cid]
        for kind, rest, lineno in items:
            try:
                _apply(spec, kind, rest, lineno)
            except TableFormatError:
                raise
            except (SyntaxError, KeyError, TypeError, InconsistentTable) as exc:
                raise TableFormatError(str(exc), lineno) from exc
    return classes


def _apply(spec: ClassSpec, kind: str, rest: str, lineno: int):
    if kind == "bracket":
        m = _BRACKET.match(rest)
        if not m:
            raise TableFormatError(f"malformed bracket {rest!r}", lineno)
        scale = _scalar_coef(spec, m["coef"], lineno)
        value = _as_vector(spec.parse(m["rhs"]), lineno).scale(StarPoly.constant(scale.inverse()))
        spec.table.set(spec.frame(m["x"]), spec.frame(m["y"]), value)
    elif kind == "transfer":
        m = _TRANSFER.match(rest)
        if not m:
            raise TableFormatError(f"malformed transfer {rest!r}", lineno)
        spec.transfer.images[spec.frame(m["x"])] = _as_vector(spec.parse(m["rhs"]), lineno)
    else:
        m = _STEP.match(rest)
        if not m:
            raise TableFormatError(f"malformed step {rest!r}", lineno)
        names = {}
        for item in (m["names"] or "").split():
            frame, _, name = item.partition(":")
            if not name:
                raise TableFormatError(f"bad name binding {item!r}", lineno)
            names[spec.frame(frame)] = name
        coef = StarPoly.constant(_scalar_coef(spec, m["coef"], lineno))
        spec.steps.append(Step(spec.frame(m["t"]), coef, spec.frame(m["x"]), spec.frame(m["y"]), names))


def load_presets() -> dict[str, ClassSpec]:
    text = resources.files(__package__).joinpath("presets.txt").read_text()
    return load_classes(text)


_PRESETS: dict[str, ClassSpec] | None = None


def get_class(class_id: str) -> ClassSpec:
    global _PRESETS
    if _PRESETS is None:
        _PRESETS = load_presets()
    try:
        return _PRESETS[class_id]
    except KeyError:
        raise KeyError(f"unknown class {class_id!r}; choose from {', '.join(_PRESETS)}") from None
