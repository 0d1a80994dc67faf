"""Re-derivation of frame-transfer matrices from the bracket recipe."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..matrix_algebra import RingMatrix
from ..scalar_kernel import StarPoly, UnitFraction
from .atoms import Frame, FuncAtom
from .tables import ClassSpec, get_class
from .vector import VectorExpr, vf_bracket


class IncompleteTransfer(ValueError):
    pass


@dataclass
class Derivation:
    class_id: str
    frames: list[Frame]
    images: dict[Frame, VectorExpr]
    definitions: dict[str, StarPoly]
    fresh: dict[str, FuncAtom]
    matrix: RingMatrix
    notes: list[str] = field(default_factory=list)

    @property
    def fresh_reals(self) -> set[str]:
        return {n for n, s in self.fresh.items() if s.base_real}

    def definitions_expr(self) -> dict[str, str]:
        return {n: d.to_expr() for n, d in self.definitions.items()}


def _name_coefficients(spec: ClassSpec, step, raw: VectorExpr, defs: dict, fresh: dict) -> VectorExpr:
    out = {}
    for frame, coeff in raw.items():
        if frame not in step.names:
            continue
        name = step.names[frame]
        if name in defs:
            raise ValueError(f"class {spec.id}: coefficient {name} defined twice")
        sym = FuncAtom(name, base_unit=name in spec.units, base_real=coeff.conj() == coeff)
        defs[name] = coeff
        fresh[name] = sym
        out[frame] = StarPoly.symbol(sym)
    for frame, coeff in raw.items():
        if frame in step.names:
            continue
        if frame != step.target:
            for name, d in defs.items():
                if coeff == d:
                    coeff = StarPoly.symbol(fresh[name])
                    break
                if coeff == d.conj():
                    coeff = StarPoly.symbol(fresh[name].conj())
                    break
        out[frame] = coeff
    return VectorExpr(out)


def derive_transfer(class_id) -> Derivation:
    """Push the primed frame forward and read off the transfer matrix.

    Each recipe step brackets two already-known primed fields, rewrites the
    coefficients named in the step as fresh functions, and recognises the
    remaining ones as existing functions or their conjugates.
    """
    spec = class_id if isinstance(class_id, ClassSpec) else get_class(class_id)
    images: dict[Frame, VectorExpr] = {}
    for f, v in spec.transfer.images.items():
        images[f] = v
        images.setdefault(f.conj(), v.conj())
    defs: dict[str, StarPoly] = {}
    fresh: dict[str, FuncAtom] = {}
    notes = []
    for step in spec.steps:
        raw = vf_bracket(images[step.left], images[step.right], spec.table).scale(step.coeff)
        named = _name_coefficients(spec, step, raw, defs, fresh)
        previous = images.get(step.target)
        if previous is not None and previous != named:
            notes.append(f"{step.target}' recomputed differs from its conjugate image")
        images[step.target] = named
        if step.target.conj() != step.target:
            images.setdefault(step.target.conj(), named.conj())
    missing = [f.name for f in spec.frames if f not in images]
    if missing:
        raise IncompleteTransfer(f"class {spec.id}: no image for {missing}")
    for f in spec.frames:
        stray = [g.name for g in images[f].frames() if g not in spec.frames]
        if stray:
            raise IncompleteTransfer(f"class {spec.id}: image leaves the frame via {stray}")
    rows = [[UnitFraction(images[r][c]) for c in spec.frames] for r in spec.frames]
    return Derivation(spec.id, list(spec.frames), images, defs, fresh, RingMatrix(rows), notes)


def to_template_matrix(d: Derivation, template) -> RingMatrix | None:
    """Rewrite the derived matrix in the template's parameter symbols.

    Returns None when an entry still involves derivation atoms.
    """
    table = template.symbols()
    mapping = {}
    for row in d.matrix.rows:
        for x in row:
            for s in x.symbols():
                if not isinstance(s, FuncAtom) or s.prefix or s.base not in table:
                    return None
                target = table[s.base]
                mapping[s] = target.conj() if s.conjugated else target
    return d.matrix.map(lambda x: x.subs({k: StarPoly.symbol(v) for k, v in mapping.items()}))


@dataclass
class KeystoneResult:
    class_id: str
    pattern_equal: bool
    diagonal_equal: bool
    full_equal: bool
    details: list[str]

    @property
    def ok(self) -> bool:
        return self.pattern_equal and self.diagonal_equal


def keystone(class_id: str) -> KeystoneResult:
    """Compare the derived matrix with the group template of the same class."""
    from ..ambiguity_groups import get_template

    d = derive_transfer(class_id)
    t = get_template(class_id)
    T = t.template_matrix()
    details = []
    pattern = all(
        bool(d.matrix[i, j]) == bool(T[i, j]) for i in range(t.n) for j in range(t.n)
    ) and d.matrix.n == t.n
    if not pattern:
        details.append("zero patterns differ")
    M = to_template_matrix(d, t)
    if M is None:
        details.append("derived entries involve derivation atoms")
        return KeystoneResult(class_id, pattern, False, False, details)
    diag = all(M[i, i] == T[i, i] for i in range(t.n))
    for i in range(t.n):
        if M[i, i] != T[i, i]:
            details.append(f"diagonal ({i + 1},{i + 1}): derived {M[i, i]} vs template {T[i, i]}")
    full = M == T
    return KeystoneResult(class_id, pattern, diag, full, details)
