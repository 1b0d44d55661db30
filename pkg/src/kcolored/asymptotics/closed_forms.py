"""Closed forms of the tree sums behind the crossing-count formula

Each sum over the doubling tree is a combination of 16^t, 8^t, 4^t and 2^t;
TermCoeffs holds the four coefficients. The direct_sum_* functions evaluate
the same sums term by term and serve as oracles.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from kcolored.domain.entities import OffsetPair


@dataclass(frozen=True)
class TermCoeffs:
    """Coefficients of 2^{4t}, 2^{3t}, 2^{2t} and 2^t"""

    c4: Fraction = Fraction(0)
    c3: Fraction = Fraction(0)
    c2: Fraction = Fraction(0)
    c1: Fraction = Fraction(0)

    def evaluate(self, t: int) -> Fraction:
        return self.c4 * 16**t + self.c3 * 8**t + self.c2 * 4**t + self.c1 * 2**t

    def __add__(self, other: TermCoeffs) -> TermCoeffs:
        return TermCoeffs(self.c4 + other.c4, self.c3 + other.c3, self.c2 + other.c2, self.c1 + other.c1)

    def scaled(self, factor: int | Fraction) -> TermCoeffs:
        return TermCoeffs(self.c4 * factor, self.c3 * factor, self.c2 * factor, self.c1 * factor)

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.c4, self.c3, self.c2, self.c1)


def f_closed(o: OffsetPair, x: int, i: int, j: int) -> int:
    """Side count at the j-th descendant on level i of a vertex with side count x

    Solves the recurrence S -> 2S + o1 (first child), S -> 2S + o2 (second child).
    """
    if i < 0:
        raise ValueError(f"Level must be >= 0, got {i}")
    width = 2**i
    if not 1 <= j <= width:
        raise ValueError(f"Index j must be in 1..{width} on level {i}, got {j}")
    return width * x + o.o1 * (width - j) + o.o2 * (j - 1)


def term_A(x: int) -> TermCoeffs:
    """Closed form of sum_{i<t} 16^{t-i-1} (C(2^i x, 2) - 2^i x)"""
    x = Fraction(x)
    return TermCoeffs(
        c4=x * x / 24 - 3 * x / 28,
        c3=Fraction(0),
        c2=-x * x / 24,
        c1=3 * x / 28,
    )


def term_B(o: OffsetPair, x: int) -> TermCoeffs:
    """Closed form of sum_{i<t} 16^{t-i-1} sum_j C(f_closed(o, x, i, j), 2)

    Written in terms of y = x + o1, b = o2 - o1 and s = (o1 + o2) / 2; the
    coefficients of the four powers always sum to zero (empty sum at t = 0).
    """
    x = Fraction(x)
    o1, o2 = Fraction(o.o1), Fraction(o.o2)
    y = x + o1
    b = o2 - o1
    s = (o1 + o2) / 2
    cubic = y * y + b * y + b * b / 3
    quadratic = -2 * y * o1 - b * (y + o1) - b * b / 2 - x - s
    linear = o1 * o1 + b * o1 + b * b / 6 + s
    return TermCoeffs(
        c4=cubic / 16 + quadratic / 24 + linear / 28,
        c3=-cubic / 16,
        c2=-quadratic / 24,
        c1=-linear / 28,
    )


def term_C(o: OffsetPair, x: int) -> TermCoeffs:
    """Closed form of sum_{i<t} 16^{t-i-1} sum_j f_closed(o, x, i, j)"""
    x = Fraction(x)
    s = Fraction(o.o1 + o.o2, 2)
    return TermCoeffs(
        c4=x / 12 + s / 84,
        c3=Fraction(0),
        c2=-(x + s) / 12,
        c1=s / 14,
    )


def direct_sum_A(x: int, t: int) -> int:
    return sum(16 ** (t - i - 1) * (comb(2**i * x, 2) - 2**i * x) for i in range(t))


def direct_sum_B(o: OffsetPair, x: int, t: int) -> int:
    return sum(
        16 ** (t - i - 1) * sum(comb(f_closed(o, x, i, j), 2) for j in range(1, 2**i + 1)) for i in range(t)
    )


def direct_sum_C(o: OffsetPair, x: int, t: int) -> int:
    return sum(16 ** (t - i - 1) * sum(f_closed(o, x, i, j) for j in range(1, 2**i + 1)) for i in range(t))
