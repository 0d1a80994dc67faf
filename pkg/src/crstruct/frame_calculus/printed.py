"""Printed transfer matrices and coefficient definitions, diffed against
the derivation."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..matrix_algebra import RingMatrix
from ..scalar_kernel import UnitFraction
from .derive import derive_transfer
from .tables import get_class


def _rows(text: str) -> list[list[str]]:
    return [[x.strip() for x in row.split(";")] for row in text.strip().splitlines()]


MATRICES = {
    "I": _rows("""
        a ; 0 ; 0
        0 ; conj(a) ; 0
        b ; conj(b) ; a*conj(a)
    """),
    "II": _rows("""
        a ; 0 ; 0 ; 0
        0 ; conj(a) ; 0 ; 0
        b ; conj(b) ; a*conj(a) ; 0
        e ; d ; c ; a*conj(a)
    """),
    "III1": _rows("""
        a ; 0 ; 0 ; 0 ; 0
        0 ; conj(a) ; 0 ; 0 ; 0
        b ; conj(b) ; a*conj(a) ; 0 ; 0
        e ; d ; c ; a*a*conj(a) ; 0
        conj(d) ; conj(e) ; conj(c) ; 0 ; a*conj(a)*conj(a)
    """),
    "III2": _rows("""
        a ; 0 ; 0 ; 0 ; 0
        0 ; conj(a) ; 0 ; 0 ; 0
        b ; conj(b) ; a*conj(a) ; 0 ; 0
        e ; d ; c ; a*a*conj(a) ; 0
        k ; h ; g ; f ; a*a*a*conj(a)
    """),
    "IV1": _rows("""
        a11 ; a21 ; 0 ; 0 ; 0
        a12 ; a22 ; 0 ; 0 ; 0
        0 ; 0 ; conj(a11) ; conj(a21) ; 0
        0 ; 0 ; conj(a21) ; conj(a22) ; 0
        b1 ; b2 ; conj(b1) ; conj(b2) ; c
    """),
    "IV2": _rows("""
        c ; 0 ; 0 ; 0 ; 0
        b ; a ; 0 ; 0 ; 0
        0 ; 0 ; conj(c) ; 0 ; 0
        0 ; 0 ; conj(b) ; conj(a) ; 0
        e ; d ; conj(e) ; conj(d) ; a*conj(a)
    """),
}

DEFINITIONS = {
    "I": {"b": "-I*conj(a)*L(a)"},
    "II": {
        "b": "-I*conj(a)*Lbar(a)",
        "c": "-I*a*conj(b) + a*L(a*conj(a))",
        "d": "a*L(conj(b))",
        "e": "a*L(b) - a*conj(a)*T(a) - conj(b)*Lbar(a) - b*L(a)",
    },
    "III1": {},
    "III2": {
        "f": "a*c + a*L(a*a*conj(a))",
        "g": "-I*a*d + a*L(c)",
        "h": "a*L(d)",
        "k": "a*L(e) - a*a*conj(a)*S(a) - c*T(a) - d*Lbar(a) - e*L(a)",
    },
    "IV1": {
        "c": "a11*conj(a11) + a21*conj(a11)*A + a11*conj(a21)*conj(A) + a21*conj(a21)*C",
        "b1": "a21*conj(a11)*D1 + a11*conj(a21)*conj(B1) + a21*conj(a21)*E1"
              " - I*conj(a11)*L1bar(a11) - I*conj(a21)*L2bar(a11)",
        "b2": "a21*conj(a11)*D2 + a11*conj(a21)*conj(B2) + a21*conj(a21)*E2"
              " - I*conj(a11)*L1bar(a21) - I*conj(a21)*L2bar(a21)",
    },
    "IV2": {
        "d": "b*conj(a)*B + a*conj(b)*D - I*conj(a)*L1bar(a) - I*conj(b)*Kbar(a)",
        "e": "b*conj(a)*A + a*conj(b)*C + b*conj(b)*E - I*conj(a)*L1bar(b) - I*conj(b)*Kbar(b)",
    },
}


@dataclass
class ErratumRecord:
    class_id: str
    entry: str
    printed: str
    derived: str
    status: str  # "match" or "erratum"

    def to_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass
class ErratumReport:
    class_id: str
    records: list[ErratumRecord] = field(default_factory=list)

    @property
    def errata(self) -> list[ErratumRecord]:
        return [r for r in self.records if r.status == "erratum"]

    def to_json(self) -> list[dict]:
        return [r.to_dict() for r in self.records]


def printed_matrix(class_id: str) -> RingMatrix:
    d = derive_transfer(class_id)
    spec = get_class(class_id)
    return RingMatrix([
        [UnitFraction(spec.parse(x, d.fresh_reals)) for x in row] for row in MATRICES[class_id]
    ])


def compare_with_printed(class_id: str) -> ErratumReport:
    """Entrywise diff of derived matrix and definitions against printed ones."""
    d = derive_transfer(class_id)
    spec = get_class(class_id)
    report = ErratumReport(class_id)
    printed = MATRICES[class_id]
    for i, row in enumerate(printed):
        for j, text in enumerate(row):
            p = UnitFraction(spec.parse(text, d.fresh_reals))
            derived = d.matrix[i, j]
            status = "match" if p == derived else "erratum"
            report.records.append(
                ErratumRecord(class_id, f"matrix ({i + 1},{j + 1})", text, derived.to_expr(), status)
            )
    for name, text in DEFINITIONS[class_id].items():
        p = spec.parse(text, d.fresh_reals)
        derived = d.definitions[name]
        status = "match" if p == derived else "erratum"
        report.records.append(ErratumRecord(class_id, name, text, derived.to_expr(), status))
    return report
