"""Validated scalar arithmetic: intervals, constants, expression trees, signs."""

from .constants import ConstantTable, constants
from .expr import (Add, Cbrt, Const, Div, Expr, Lit, Mul, PI, PI2, PI4, Pow,
                   Sqrt, Var, as_expr, diff, free_vars, iv_eval, subs)
from .interval import (DEFAULT_PRECISION, DomainError, Interval, PoleError,
                       gamma_point, get_precision, pi_interval, precision)
from .polyform import (GenDef, NormalizationError, Poly, normalize, poly_equal,
                       poly_eval)
from .sign import Sign, prove_negative, prove_positive, sign_over

__all__ = [
    "Add", "Cbrt", "Const", "ConstantTable", "DEFAULT_PRECISION", "Div",
    "DomainError", "Expr", "GenDef", "Interval", "Lit", "Mul",
    "NormalizationError", "PI", "PI2", "PI4", "PoleError", "Poly", "Pow",
    "Sign", "Sqrt", "Var", "as_expr", "constants", "diff", "free_vars",
    "gamma_point", "get_precision", "iv_eval", "normalize", "pi_interval",
    "poly_equal", "poly_eval", "precision", "prove_negative",
    "prove_positive", "sign_over", "subs",
]
