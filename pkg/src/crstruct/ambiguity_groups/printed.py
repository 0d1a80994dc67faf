"""Printed inverse and composition formulas, diffed against the computed ones.

Each display is encoded verbatim (0-based matrix positions).  A display whose
left-hand matrix differs from the template is flagged ``consistent=False``:
every formula read from it is then ambiguous by construction.

Classification of a printed variant:

* ``match``     equal to the computed value;
* ``erratum``   differs, and the quantity is printed ambiguously (two printed
                renderings disagree, possibly through a conjugate position, or
                the display itself is inconsistent with the template);
* ``mismatch``  differs although every printed rendering agrees.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..scalar_kernel import UnitFraction, parse_expr
from .groups import compose_params, invert_params
from .templates import GroupTemplate, get_template, suffixed

INVERSE = {
    "I": {
        "consistent": True,
        "matrix": {
            (0, 0): "1/a",
            (1, 1): "1/conj(a)",
            (2, 0): "-b/(a*conj(a)*conj(a))",
            (2, 1): "-conj(b)/(a*conj(a)*conj(a))",
            (2, 2): "1/(a*conj(a))",
        },
        "text": {"a": "1/a", "b": "-b/(a*conj(a))"},
    },
    "II": {
        "consistent": True,
        "matrix": {
            (0, 0): "1/a",
            (1, 1): "1/conj(a)",
            (2, 0): "-b/(a*a*conj(a))",
            (2, 1): "-conj(b)/(a*conj(a)*conj(a))",
            (2, 2): "1/(a*conj(a))",
            (3, 0): "b*c/(a^4*conj(a)^2) - e/(a^3*conj(a))",
            (3, 1): "c*conj(b)/(a^3*conj(a)^3) - d/(a^2*conj(a)^2)",
            (3, 2): "-c/(a^3*conj(a)^2)",
            (3, 3): "1/(a^2*conj(a))",
        },
        "text": {
            "a": "1/a",
            "b": "-b/(a*a*conj(a))",
            "c": "-c/(a*a*a*a*conj(a))",
            "d": "c*conj(b)/(a*a*a*a*conj(a)) - d/(a*a*a*conj(a))",
            "e": "b*c/(a*a*a*a*conj(a)) - e/(a*a*a*conj(a))",
        },
    },
    "III1": {
        # the inverted matrix is printed with weight a*conj(a)*conj(a) at (3,3)
        "consistent": False,
        "matrix": {
            (0, 0): "1/a",
            (1, 1): "1/conj(a)",
            (2, 0): "-b/(a*conj(a))",
            (2, 1): "-conj(b)/(a*conj(a))",
            (2, 2): "1/(a*conj(a))",
            (3, 0): "b*c/(a^4*conj(a)^2) - e/(a^3*conj(a))",
            (3, 1): "c*conj(b)/(a^3*conj(a)^3) - d/(a^2*conj(a)^2)",
            (3, 2): "-c/(a^3*conj(a)^2)",
            (3, 3): "1/(a^2*conj(a))",
            (4, 0): "b*c/(a^3*conj(a)^3) - d/(a^2*conj(a)^2)",
            (4, 1): "b*c/(a^2*conj(a)^4) - e/(a*conj(a)^3)",
            (4, 2): "-c/(a^2*conj(a)^3)",
            (4, 4): "1/(a*conj(a)^2)",
        },
        "text": {
            "a": "1/a",
            "b": "-b/(a*a*conj(a))",
            "c": "-c/(a*a*a*a*conj(a))",
            "d": "c*conj(b)/(a*a*a*a*conj(a)*conj(a)) - d/(a*a*conj(a))",
            "e": "b*c/(a*a*a*a*conj(a)*conj(a)) - e/(a*a*a*conj(a))",
        },
    },
    "III2": {
        "consistent": True,
        "matrix": {
            (0, 0): "1/a",
            (1, 1): "1/conj(a)",
            (2, 0): "-b/(a*a*conj(a))",
            (2, 1): "-conj(b)/(a*a*conj(a))",
            (2, 2): "1/(a*conj(a))",
            (3, 0): "b*c/(a^4*conj(a)^2) - e/(a^3*conj(a))",
            (3, 1): "c*conj(b)/(a^3*conj(a)^3) - d/(a^2*conj(a)^2)",
            (3, 2): "-c/(a^3*conj(a)^2)",
            (3, 3): "1/(a^2*conj(a))",
            (4, 0): "-b*c*f/(a^7*conj(a)^3) + b*g/(a^5*conj(a)^2) + e*f/(a^6*conj(a)^2) - k/(a^4*conj(a))",
            (4, 1): "-f*c*b/(a^6*conj(a)^4) + g*conj(b)/(a^4*conj(a)^3) + f*d/(a^5*conj(a)^3) - h/(a^3*conj(a)^2)",
            (4, 2): "f*c/(a^6*conj(a)^3) - g/(a^4*conj(a)^2)",
            (4, 3): "-f/(a^5*conj(a)^2)",
            (4, 4): "1/(a^3*conj(a))",
        },
        "text": {
            "a": "1/a",
            "b": "-b/(a*a*conj(a))",
            "c": "-c/(a*a*a*conj(a)*conj(a))",
            "d": "c*conj(b)/(a*a*a*conj(a)*conj(a)*conj(a)) - d/(a*a*conj(a))",
            "e": "b*c/(a*a*a*conj(a)*conj(a)*conj(a)) - e/(a*a*a*conj(a))",
            "f": "-f/(a^5*conj(a)^2)",
            "g": "c*f/(a^6*conj(a)^3) - g/(a^4*conj(a)^2)",
            "h": "-f*c*b/(a^6*conj(a)^4) + g*conj(b)/(a^4*conj(a)^3) + f*d/(a^5*conj(a)^3) - h/(a^3*conj(a)^2)",
            "k": "-b*c*f/(a^7*conj(a)^3) + b*g/(a^5*conj(a)^2) + e*f/(a^6*conj(a)^2) - k/(a^4*conj(a))",
        },
    },
}

# composition laws in parameters with suffixes 1 and 2
COMPOSITION = {
    "I": {
        "consistent": True,
        "laws": {"a": "a1*a2", "b": "b1*a2 + a1*conj(a1)*b2"},
    },
    "II": {
        # product display and laws use the weight a*conj(a)*conj(a) at (3,3)
        "consistent": False,
        "laws": {
            "a": "a1*a2",
            "b": "b1*a2 + a1*conj(a1)*b2",
            "c": "c1*a2*conj(a2) + a1*conj(a1)*conj(a1)*c2",
            "d": "d1*conj(a2) + c1*conj(b2) + a1*conj(a1)*conj(a1)*d2",
            "e": "e1*a2 + c1*b2 + a1*conj(a1)*conj(a1)*e2",
        },
    },
    "III1": {
        "consistent": True,
        "laws": {
            "a": "a1*a2",
            "b": "b1*a2 + a1*conj(a1)*b2",
            "c": "c1*a2*conj(a2) + a1*a1*conj(a1)*c2",
            "d": "d1*conj(a2) + c1*conj(b2) + a1*a1*conj(a1)*d2",
            "e": "e1*a2 + c1*b2 + a1*a1*conj(a1)*e2",
        },
    },
    "III2": {
        "consistent": True,
        "laws": {
            "a": "a1*a2",
            "b": "b1*a2 + a1*conj(a1)*b2",
            "c": "c1*a2*conj(a2) + a1*a1*conj(a1)*c2",
            "d": "d1*conj(a2) + c1*conj(b2) + a1*a1*conj(a1)*d2",
            "e": "e1*a2 + c1*b2 + a1*a1*conj(a1)*e2",
            "f": "f1*a2*a2*conj(a2) + a1*a1*a1*conj(a1)*f2",
            "g": "g1*a2*conj(a2) + f1*c2 + a1*a1*a1*conj(a1)*g2",
            "h": "h1*conj(a2) + g1*conj(b2) + f1*d2 + a1*a1*a1*conj(a1)*h2",
            "k": "k1*a2 + g1*b2 + f1*e2 + a1*a1*a1*conj(a1)*k2",
        },
    },
}


@dataclass
class PrintedRecord:
    group: str
    kind: str  # "inverse" or "composition"
    entry: str
    source: str
    printed: str
    derived: str
    status: str

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def _parse(t: GroupTemplate, text: str, suffixes=("",)) -> UnitFraction:
    table = {}
    for s in suffixes:
        for p in t.params:
            table[suffixed(p.name, s)] = p.symbol(s)
    return parse_expr(text, symbols=table)


def _conj_partners(t: GroupTemplate) -> dict:
    """Map each position to (representative position, conjugated?)."""
    M = t.template_matrix()
    reps = {}
    seen = []
    for i in range(t.n):
        for j in range(t.n):
            x = M[i, j]
            rep = None
            for (pi, pj) in seen:
                y = M[pi, pj]
                if x == y:
                    rep = ((pi, pj), False)
                    break
                if x == y.conj():
                    rep = ((pi, pj), True)
                    break
            if rep is None:
                seen.append((i, j))
                rep = ((i, j), False)
            reps[(i, j)] = rep
    return reps


def compare_inverse(t: GroupTemplate) -> list[PrintedRecord]:
    data = INVERSE.get(t.id)
    if data is None:
        return []
    from ..matrix_algebra import mat_inverse
    from .groups import embed

    p = t.generic()
    derived = mat_inverse(embed(t, p), t.units_for(p))
    positions = t.positions()
    reps = _conj_partners(t)
    variants = []  # (rep position, normalized value, source, printed, position, name)
    for (i, j), text in data["matrix"].items():
        v = _parse(t, text)
        rep, flip = reps[(i, j)]
        variants.append((rep, v.conj() if flip else v, f"matrix ({i + 1},{j + 1})", text, (i, j), None))
    for name, text in data["text"].items():
        v = _parse(t, text)
        pos = positions[name]
        rep, flip = reps[pos]
        variants.append((rep, v.conj() if flip else v, f"text {name}~", text, pos, name))
    by_rep: dict = {}
    for rep, v, *_ in variants:
        by_rep.setdefault(rep, set()).add(v)
    out = []
    for rep, v, source, text, pos, name in variants:
        d = derived[pos]
        printed_value = _parse(t, text)
        ambiguous = (not data["consistent"]) or len(by_rep[rep]) > 1
        if printed_value == d:
            status = "match"
        else:
            status = "erratum" if ambiguous else "mismatch"
        entry = f"{name}~" if name else f"inverse({pos[0] + 1},{pos[1] + 1})"
        out.append(PrintedRecord(t.id, "inverse", entry, source, text, d.to_expr(), status))
    return out


def compare_composition(t: GroupTemplate) -> list[PrintedRecord]:
    data = COMPOSITION.get(t.id)
    if data is None:
        return []
    p3 = compose_params(t, t.generic("1"), t.generic("2"))
    out = []
    for name, text in data["laws"].items():
        v = _parse(t, text, ("1", "2"))
        d = p3[name]
        if v == d:
            status = "match"
        else:
            status = "erratum" if not data["consistent"] else "mismatch"
        out.append(PrintedRecord(t.id, "composition", f"{name}3", "text", text, d.to_expr(), status))
    return out


def compare_group_with_printed(group_id: str) -> list[PrintedRecord]:
    t = get_template(group_id)
    return compare_composition(t) + compare_inverse(t)


def printed_inverse_params(group_id: str) -> dict[str, UnitFraction]:
    t = get_template(group_id)
    return {k: _parse(t, v) for k, v in INVERSE[group_id]["text"].items()}


__all__ = [
    "COMPOSITION", "INVERSE", "PrintedRecord", "compare_composition",
    "compare_group_with_printed", "compare_inverse", "invert_params",
    "printed_inverse_params",
]
