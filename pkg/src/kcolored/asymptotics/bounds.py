"""Bound arithmetic, sanity gates and decimal rendering"""
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction

from kcolored.domain.errors import InvariantViolation

# Known lower bound on the rectilinear crossing constant (k = 1)
RECTILINEAR_LOWER = Fraction(37997, 100000)

DECIMAL_DIGITS = 17


def bound_from_alpha(alpha: Fraction, n: int) -> Fraction:
    """Limit of cr_k(P_t) / C(2^t n, 4): 24 alpha / n^4"""
    if n < 3:
        raise ValueError(f"Bound needs n >= 3, got {n}")
    if alpha <= 0:
        raise ValueError(f"Leading coefficient must be positive, got {alpha}")
    return Fraction(24) * Fraction(alpha) / n**4


def book_bound(k: int) -> Fraction:
    """Upper bound from convex (book) drawings: 2/k^2 - 1/k^3"""
    return Fraction(2, k * k) - Fraction(1, k**3)


def lower_bound(k: int) -> Fraction:
    """General lower bound 3 / (29 k^2)"""
    return Fraction(3, 29 * k * k)


def check_bound_gates(bound: Fraction, k: int):
    """Raise InvariantViolation when a bound falls below a known lower bound"""
    if bound < lower_bound(k):
        raise InvariantViolation(f"Bound {render_decimal(bound)} is below the lower bound 3/(29k^2) for k={k}")
    if k == 1 and bound < RECTILINEAR_LOWER:
        raise InvariantViolation(f"Bound {render_decimal(bound)} is below the rectilinear lower bound 0.37997")


def render_decimal(value: Fraction, digits: int = DECIMAL_DIGITS) -> str:
    """Decimal string with `digits` significant digits, rounded half to even"""
    value = Fraction(value)
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = ROUND_HALF_EVEN
        rendered = Decimal(value.numerator) / Decimal(value.denominator)
    return format(rendered, "f")


def render_fraction(value: Fraction) -> str:
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
