"""Closed forms, asymptotic coefficients and bound arithmetic"""
from .bounds import (
    DECIMAL_DIGITS,
    RECTILINEAR_LOWER,
    book_bound,
    bound_from_alpha,
    check_bound_gates,
    lower_bound,
    render_decimal,
    render_fraction,
)
from .closed_forms import (
    TermCoeffs,
    direct_sum_A,
    direct_sum_B,
    direct_sum_C,
    f_closed,
    term_A,
    term_B,
    term_C,
)
from .coefficients import (
    AsymptoticCoeffs,
    coefficients,
    fit_coefficients,
    local_alpha,
    local_terms,
    theorem1_count,
)

__all__ = [
    "DECIMAL_DIGITS",
    "RECTILINEAR_LOWER",
    "AsymptoticCoeffs",
    "TermCoeffs",
    "book_bound",
    "bound_from_alpha",
    "check_bound_gates",
    "coefficients",
    "direct_sum_A",
    "direct_sum_B",
    "direct_sum_C",
    "f_closed",
    "fit_coefficients",
    "local_alpha",
    "local_terms",
    "lower_bound",
    "render_decimal",
    "render_fraction",
    "term_A",
    "term_B",
    "term_C",
    "theorem1_count",
]
