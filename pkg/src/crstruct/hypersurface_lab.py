"""Graphed hypersurfaces v = phi in C^2 and C^3: CR generators, coordinate
brackets, rank and Levi tests at rational points, and the multiplier of a
polynomial map.

On M the intrinsic coordinates are (x, y, u) or (x1, y1, x2, y2, u).  With
w = u + i v the field d/dz + mu d/dw is tangent to v = phi exactly when
mu = -2 phi_z / (i + phi_u); pulled back to M it reads

    L = 1/2 d/dx - i/2 d/dy - A d/du,     A = phi_z / (i + phi_u).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from ._elimination import rank, solve
from .scalar_kernel import GaussRat, StarPoly, Symbol, parse_expr
from .scalar_kernel.errors import ScalarError
from .scalar_kernel.fraction import evaluate_poly


class PointNotOnM(ValueError):
    pass


class PoleAtPoint(ZeroDivisionError):
    pass


class ZeroDenominator(ZeroDivisionError):
    pass


class HypersurfaceFormatError(ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        where = f"line {line}" + (f", column {column}" if column else "") if line else ""
        super().__init__(f"{where}: {message}" if where else message)
        self.line = line
        self.column = column


HALF = GaussRat(Fraction(1, 2))
I = GaussRat(0, 1)


class RationalFunc:
    """``numerator / denominator`` with polynomial parts; not gcd-reduced."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = StarPoly._lift(num)
        den = StarPoly.constant(1) if den is None else StarPoly._lift(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if den.is_constant():
            c = den.constant_value()
            if c != 1:
                num = num.scale(c.inverse())
                den = StarPoly.constant(1)
        self.num = num
        self.den = den

    @classmethod
    def lift(cls, value) -> RationalFunc:
        return value if isinstance(value, RationalFunc) else cls(value)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        other = RationalFunc.lift(other)
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def __repr__(self):
        return f"RationalFunc({self.to_expr()})"

    def to_expr(self) -> str:
        if self.den == 1:
            return self.num.to_expr()
        return f"({self.num.to_expr()})/({self.den.to_expr()})"

    def __neg__(self):
        return RationalFunc(-self.num, self.den)

    def __add__(self, other):
        other = RationalFunc.lift(other)
        if self.den == other.den:
            return RationalFunc(self.num + other.num, self.den)
        return RationalFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-RationalFunc.lift(other))

    def __rsub__(self, other):
        return RationalFunc.lift(other) - self

    def __mul__(self, other):
        other = RationalFunc.lift(other)
        if self.num.is_zero() or other.num.is_zero():
            return RationalFunc(StarPoly())
        return RationalFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RationalFunc.lift(other)
        return RationalFunc(self.num * other.den, self.den * other.num)

    def conj(self) -> RationalFunc:
        return RationalFunc(self.num.conj(), self.den.conj())

    def diff(self, sym) -> RationalFunc:
        dn = self.num.diff(sym)
        if self.den == 1:
            return RationalFunc(dn)
        dd = self.den.diff(sym)
        if dd.is_zero():
            return RationalFunc(dn, self.den)
        return RationalFunc(dn * self.den - self.num * dd, self.den * self.den)

    def evaluate(self, values: Mapping) -> GaussRat:
        d = evaluate_poly(self.den, values)
        if not d:
            raise PoleAtPoint(f"denominator {self.den.to_expr()} vanishes at the point")
        return evaluate_poly(self.num, values) / d

    def normalized(self) -> RationalFunc:
        """Cancel common monomial factors (display only)."""
        g = self.num.min_exponents().gcd(self.den.min_exponents())
        if not g:
            return self
        return RationalFunc(self.num.div_mono(g), self.den.div_mono(g))


class CoordVectorField:
    """A vector field on M in its intrinsic real coordinates."""

    __slots__ = ("coords", "comps")

    def __init__(self, coords: Sequence[Symbol], comps: Mapping | None = None):
        self.coords = tuple(coords)
        comps = comps or {}
        self.comps = {c: RationalFunc.lift(comps[c]) for c in self.coords if c in comps}

    def __getitem__(self, coord) -> RationalFunc:
        return self.comps.get(coord, RationalFunc(StarPoly()))

    def __repr__(self):
        inner = ", ".join(f"d/d{c.name}: {v.to_expr()}" for c, v in self.comps.items() if v)
        return f"CoordVectorField({inner})"

    def __eq__(self, other):
        return isinstance(other, CoordVectorField) and all(
            self[c] == other[c] for c in self.coords
        )

    __hash__ = None

    def _combine(self, other, sign):
        return CoordVectorField(
            self.coords, {c: self[c] + other[c] * sign for c in self.coords}
        )

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return CoordVectorField(self.coords, {c: -v for c, v in self.comps.items()})

    def scale(self, f) -> CoordVectorField:
        f = RationalFunc.lift(f)
        return CoordVectorField(self.coords, {c: f * v for c, v in self.comps.items()})

    def conj(self) -> CoordVectorField:
        return CoordVectorField(self.coords, {c: v.conj() for c, v in self.comps.items()})

    def apply(self, f) -> RationalFunc:
        f = RationalFunc.lift(f)
        out = RationalFunc(StarPoly())
        for c, v in self.comps.items():
            if v:
                d = f.diff(c)
                if d:
                    out = out + v * d
        return out

    def evaluate(self, values: Mapping) -> list[GaussRat]:
        return [self[c].evaluate(values) if self[c] else GaussRat(0) for c in self.coords]


def coord_bracket(X: CoordVectorField, Y: CoordVectorField) -> CoordVectorField:
    """[X, Y]_j = X(Y_j) - Y(X_j)."""
    return CoordVectorField(X.coords, {c: X.apply(Y[c]) - Y.apply(X[c]) for c in X.coords})


@dataclass
class GraphedHypersurface:
    ambient: str  # "C2" or "C3"
    phi: StarPoly
    source: str = ""

    def __post_init__(self):
        if self.ambient not in ("C2", "C3"):
            raise ValueError(f"ambient must be C2 or C3, not {self.ambient!r}")
        allowed = set(coordinates(self.ambient))
        bad = [s.to_expr() for s in self.phi.symbols() if s not in allowed]
        if bad:
            raise ValueError(f"phi uses {', '.join(sorted(bad))}; allowed: "
                             + ", ".join(s.name for s in coordinates(self.ambient)))

    @property
    def coords(self) -> tuple[Symbol, ...]:
        return coordinates(self.ambient)

    @property
    def u(self) -> Symbol:
        return self.coords[-1]

    def holomorphic_pairs(self) -> list[tuple[Symbol, Symbol]]:
        c = self.coords
        return [(c[0], c[1])] if self.ambient == "C2" else [(c[0], c[1]), (c[2], c[3])]

    def point_values(self, point: Sequence) -> dict:
        """Bind intrinsic coordinates; a trailing v is checked against phi."""
        pt = [GaussRat.coerce(p) for p in point]
        n = len(self.coords)
        if len(pt) not in (n, n + 1):
            raise ValueError(f"expected {n} or {n + 1} coordinates, got {len(pt)}")
        if any(not p.is_real() for p in pt):
            raise ValueError("point coordinates must be real")
        values = dict(zip(self.coords, pt))
        if len(pt) == n + 1:
            v = evaluate_poly(self.phi, values)
            if v != pt[-1]:
                raise PointNotOnM(f"v = {pt[-1]} but phi = {v} at this point")
        return values


_C2 = (Symbol("x", real=True), Symbol("y", real=True), Symbol("u", real=True))
_C3 = tuple(Symbol(n, real=True) for n in ("x1", "y1", "x2", "y2", "u"))


def coordinates(ambient: str) -> tuple[Symbol, ...]:
    return _C2 if ambient == "C2" else _C3


def hypersurface(ambient: str, phi: str) -> GraphedHypersurface:
    names = {s.name: s for s in coordinates(ambient)}
    value = parse_expr(phi, symbols=names)
    if value.denominator:
        raise ValueError("phi must be a polynomial")
    return GraphedHypersurface(ambient, value.numerator, phi)


def generator_coefficients(M: GraphedHypersurface) -> list[RationalFunc]:
    """A_k = phi_{z_k} / (i + phi_u) with phi_z = (phi_x - i phi_y)/2."""
    phi = M.phi
    den = StarPoly.constant(I) + phi.diff(M.u)
    out = []
    for x, y in M.holomorphic_pairs():
        phi_z = (phi.diff(x) - phi.diff(y).scale(I)).scale(HALF)
        out.append(RationalFunc(phi_z, den))
    return out


def build_generators(M: GraphedHypersurface) -> list[CoordVectorField]:
    fields = []
    for (x, y), A in zip(M.holomorphic_pairs(), generator_coefficients(M)):
        fields.append(
            CoordVectorField(M.coords, {x: HALF, y: -HALF * I, M.u: -A})
        )
    return fields


def ambient_generator(M: GraphedHypersurface) -> list[tuple[RationalFunc, RationalFunc]]:
    """(1, mu_k) such that d/dz_k + mu_k d/dw is the k-th generator."""
    return [(RationalFunc(1), A * RationalFunc(-2)) for A in generator_coefficients(M)]


def rank_at_point(fields: Sequence[CoordVectorField], values: Mapping) -> int:
    return rank([f.evaluate(values) for f in fields])


def _real_point(M: GraphedHypersurface, q) -> dict:
    return q if isinstance(q, dict) else M.point_values(q)


@dataclass
class Verdict:
    ambient: str
    verdict: str
    rank: int
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"ambient": self.ambient, "verdict": self.verdict, "rank": self.rank, **self.details}


def levi_matrix(L1: CoordVectorField, L2: CoordVectorField, values: Mapping, u: Symbol) -> list[list[GaussRat]]:
    """ell[j][k]: d/du-coefficient of i[L_j, conj L_k] in the basis
    (L1, L2, conj L1, conj L2, d/du) at the point."""
    gens = [L1, L2]
    basis = [g.evaluate(values) for g in gens] + [g.conj().evaluate(values) for g in gens]
    coords = L1.coords
    basis.append([GaussRat(1) if c == u else GaussRat(0) for c in coords])
    if rank(basis) != len(coords):
        raise ValueError("generators do not span a frame at this point")
    out = []
    for Lj in gens:
        row = []
        for Lk in gens:
            br = coord_bracket(Lj, Lk.conj()).scale(RationalFunc(I))
            x = solve(basis, br.evaluate(values))
            row.append(x[-1])
        out.append(row)
    return out


def classify_point(M: GraphedHypersurface, q, generators=None) -> Verdict:
    values = _real_point(M, q)
    gens = generators or build_generators(M)
    if M.ambient == "C2":
        (L,) = gens
        r = rank_at_point([L, L.conj(), coord_bracket(L, L.conj())], values)
        return Verdict("C2", "ClassI" if r == 3 else "Degenerate", r)
    ell = levi_matrix(gens[0], gens[1], values, M.u)
    r = rank(ell)
    verdict = {2: "ClassIV1", 1: "ClassIV2-candidate"}.get(r, "Degenerate")
    det = ell[0][0] * ell[1][1] - ell[0][1] * ell[1][0]
    details = {
        "levi_matrix": [[x.to_expr() for x in row] for row in ell],
        "levi_det": det.to_expr(),
    }
    if ell[0][0]:
        n = ell[0][0]
        details["normalized"] = [
            ["1", (ell[1][0] / n).to_expr()],
            [(ell[0][1] / n).to_expr(), (ell[1][1] / n).to_expr()],
        ]
    if r == 1:
        details["caveat"] = "rank 1 at this point only; constancy of rank nearby is not checked"
    return Verdict("C3", verdict, r, details)


@dataclass
class HoloMap:
    """Components z(z', w') and w(z', w') of h' as polynomials."""

    z: StarPoly
    w: StarPoly

    ZP = Symbol("z'")
    WP = Symbol("w'")

    def __post_init__(self):
        for comp in (self.z, self.w):
            bad = [s.to_expr() for s in comp.symbols() if s not in (self.ZP, self.WP)]
            if bad:
                raise ValueError(f"map components may use only z' and w', not {', '.join(bad)}")

    @classmethod
    def from_strings(cls, z: str, w: str) -> HoloMap:
        table = {"z'": cls.ZP, "w'": cls.WP}
        out = []
        for text in (z, w):
            v = parse_expr(text, symbols=table)
            if v.denominator:
                raise ValueError("map components must be polynomials")
            out.append(v.numerator)
        return cls(*out)


@dataclass
class MultiplierResult:
    a: GaussRat
    residual: GaussRat
    source_point: list[GaussRat]
    on_source: bool

    def to_dict(self) -> dict:
        return {
            "a": self.a.to_expr(),
            "residual": self.residual.to_expr(),
            "source_point": [x.to_expr() for x in self.source_point],
            "on_source": self.on_source,
        }


def multiplier_at(h: HoloMap, source: GraphedHypersurface, target: GraphedHypersurface, q_prime) -> MultiplierResult:
    """a = z_{z'} + mu' z_{w'} at q', and the residual
    mu(q) - (w_{z'} + mu' w_{w'}) / a at q = h'(q'), where mu, mu' are the
    d/dw-coefficients of the generators of M (source) and M' (target)."""
    if source.ambient != "C2" or target.ambient != "C2":
        raise ValueError("the multiplier is defined for hypersurfaces in C2")
    vals = target.point_values(q_prime)
    x, y, u = target.coords
    if len(q_prime) == 4:
        v = GaussRat.coerce(q_prime[3])
    else:
        v = evaluate_poly(target.phi, vals)
    zp = vals[x] + vals[y] * I
    wp = vals[u] + v * I
    at = {HoloMap.ZP: zp, HoloMap.WP: wp}
    mu_p = ambient_generator(target)[0][1].evaluate(vals)
    zz, zw = evaluate_poly(h.z.diff(HoloMap.ZP), at), evaluate_poly(h.z.diff(HoloMap.WP), at)
    wz, ww = evaluate_poly(h.w.diff(HoloMap.ZP), at), evaluate_poly(h.w.diff(HoloMap.WP), at)
    a = zz + mu_p * zw
    if not a:
        raise ZeroDenominator("a = 0: the map is not a CR equivalence at this point")
    zq, wq = evaluate_poly(h.z, at), evaluate_poly(h.w, at)
    q = [zq.re, zq.im, wq.re, wq.im]
    sx, sy, su = source.coords
    qvals = {sx: GaussRat(q[0]), sy: GaussRat(q[1]), su: GaussRat(q[2])}
    on_source = evaluate_poly(source.phi, qvals) == GaussRat(q[3])
    mu = ambient_generator(source)[0][1].evaluate(qvals)
    residual = mu - (wz + mu_p * ww) / a
    return MultiplierResult(a, residual, [GaussRat(c) for c in q], on_source)


_AMBIENT = re.compile(r"^ambient\s+(C2|C3)\s*$")
_PHI = re.compile(r"^phi\s*=\s*(.+)$")
_MAPLINE = re.compile(r"^(z|w)\s*->\s*(.+)$")


def _content_lines(text: str):
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield n, line, raw


def load_hypersurface(text: str) -> GraphedHypersurface:
    lines = list(_content_lines(text))
    if len(lines) != 2:
        raise HypersurfaceFormatError("expected an 'ambient' line and a 'phi =' line")
    (n1, l1, _), (n2, l2, raw2) = lines
    m = _AMBIENT.match(l1)
    if not m:
        raise HypersurfaceFormatError("expected 'ambient C2' or 'ambient C3'", n1)
    p = _PHI.match(l2)
    if not p:
        raise HypersurfaceFormatError("expected 'phi = <expression>'", n2)
    try:
        return hypersurface(m[1], p[1])
    except ScalarError as exc:
        col = getattr(exc, "column", 0)
        offset = raw2.index(p[1]) if col else 0
        raise HypersurfaceFormatError(str(exc), n2, col + offset) from exc
    except ValueError as exc:
        raise HypersurfaceFormatError(str(exc), n2) from exc


def load_map(text: str) -> HoloMap:
    comps = {}
    for n, line, raw in _content_lines(text):
        m = _MAPLINE.match(line)
        if not m:
            raise HypersurfaceFormatError("expected 'z -> <polynomial>' or 'w -> <polynomial>'", n)
        if m[1] in comps:
            raise HypersurfaceFormatError(f"component {m[1]} given twice", n)
        comps[m[1]] = (m[2], n, raw)
    missing = [c for c in ("z", "w") if c not in comps]
    if missing:
        raise HypersurfaceFormatError(f"missing component {missing[0]}")
    parsed = {}
    table = {"z'": HoloMap.ZP, "w'": HoloMap.WP}
    for c, (expr, n, raw) in comps.items():
        try:
            v = parse_expr(expr, symbols=table)
        except ScalarError as exc:
            col = getattr(exc, "column", 0)
            raise HypersurfaceFormatError(str(exc), n, col + raw.index(expr) if col else 0) from exc
        if v.denominator:
            raise HypersurfaceFormatError("map components must be polynomials", n)
        parsed[c] = v.numerator
    try:
        return HoloMap(parsed["z"], parsed["w"])
    except ValueError as exc:
        raise HypersurfaceFormatError(str(exc)) from exc


def parse_point(text: str) -> list[Fraction]:
    try:
        return [Fraction(p.strip()) for p in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad point {text!r}: use comma-separated rationals") from exc
