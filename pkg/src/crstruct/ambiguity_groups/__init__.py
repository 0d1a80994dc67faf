"""The six ambiguity matrix groups: templates, group laws, Lie algebras."""

from .groups import (
    CHECKS,
    CheckResult,
    ClosureViolation,
    MissingParam,
    PatternMismatch,
    VerificationReport,
    compose_params,
    embed,
    invert_params,
    random_params,
    read_params,
    verify_group,
)
from .lie import commutator, lie_algebra_basis, lie_dimension, verify_lie_closure
from .printed import compare_group_with_printed
from .templates import TEMPLATES, GroupTemplate, ParamSpec, get_template

__all__ = [
    "CHECKS", "CheckResult", "ClosureViolation", "GroupTemplate", "MissingParam",
    "ParamSpec", "PatternMismatch", "TEMPLATES", "VerificationReport",
    "commutator", "compare_group_with_printed", "compose_params", "embed",
    "get_template", "invert_params", "lie_algebra_basis", "lie_dimension",
    "random_params", "read_params", "verify_group", "verify_lie_closure",
]
