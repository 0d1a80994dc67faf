"""Abstract frame calculus: brackets with Leibniz rule, transfer derivations."""

from .atoms import Frame, FuncAtom, atom, derive
from .derive import (
    Derivation,
    IncompleteTransfer,
    KeystoneResult,
    derive_transfer,
    keystone,
    to_template_matrix,
)
from .printed import ErratumRecord, ErratumReport, compare_with_printed, printed_matrix
from .tables import (
    BracketTable,
    ClassSpec,
    InconsistentTable,
    Step,
    TableFormatError,
    TransferRule,
    get_class,
    load_classes,
    load_presets,
)
from .vector import UntabulatedBracket, VectorExpr, vf_bracket, vf_conj

CLASSES = ("I", "II", "III1", "III2", "IV1", "IV2")

__all__ = [
    "BracketTable", "CLASSES", "ClassSpec", "Derivation", "ErratumRecord",
    "ErratumReport", "Frame", "FuncAtom", "IncompleteTransfer",
    "InconsistentTable", "KeystoneResult", "Step", "TableFormatError",
    "TransferRule", "UntabulatedBracket", "VectorExpr", "atom",
    "compare_with_printed", "derive", "derive_transfer", "get_class",
    "keystone", "load_classes", "load_presets", "printed_matrix",
    "to_template_matrix", "vf_bracket", "vf_conj",
]
