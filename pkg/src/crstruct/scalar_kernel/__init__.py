"""Exact arithmetic in a conjugation-closed polynomial ring localized at units."""

from .errors import (
    ExpressionSyntaxError,
    InconsistentConjugation,
    NotAUnit,
    ScalarError,
    UnboundSymbol,
    ZeroUnit,
)
from .fraction import (
    UnitFraction,
    check_binding,
    evaluate_poly,
    frac_arith,
    frac_inv,
    substitute,
)
from .gaussrat import I, ONE, ZERO, GaussRat
from .parser import Parser, parse_expr, tokenize
from .poly import ONE_MONO, Monomial, StarPoly, poly_sum
from .symbols import Symbol, derived_unit


def poly_add(p: StarPoly, q: StarPoly) -> StarPoly:
    return p + q


def poly_mul(p: StarPoly, q: StarPoly) -> StarPoly:
    return p * q


def poly_conj(p: StarPoly) -> StarPoly:
    return p.conj()


__all__ = [
    "ExpressionSyntaxError", "GaussRat", "I", "InconsistentConjugation",
    "Monomial", "NotAUnit", "ONE", "ONE_MONO", "Parser", "ScalarError",
    "StarPoly", "Symbol", "UnboundSymbol", "UnitFraction", "ZERO", "ZeroUnit",
    "check_binding", "derived_unit", "evaluate_poly", "frac_arith", "frac_inv",
    "parse_expr", "poly_add", "poly_conj", "poly_mul", "poly_sum",
    "substitute", "tokenize",
]
