"""Exact integer and rational building blocks: binomials, rising factorials,
and the canonical "p/q" string form used in reports.

Everything here is arbitrary precision and never rounds.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial


def binomial(n: int, k: int) -> int:
    """C(n, k) with the combinatorial out-of-range convention.

    Returns 0 whenever k < 0, n < 0, or k > n, so sums over binomials can be
    written with generous index ranges and the vanishing terms drop out.
    """
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def generalized_binomial(n: int, k: int) -> Fraction:
    """C(n, k) = (-1)^k (-n)_k / k!, meaningful for negative n as well.

    Only for call sites that explicitly want the rising-factorial extension;
    ordinary code should use binomial().
    """
    if k < 0:
        raise ValueError("generalized_binomial needs k >= 0")
    return Fraction((-1) ** k) * pochhammer(Fraction(-n), k) / factorial(k)


def pochhammer(x: Fraction | int, k: int) -> Fraction:
    """Rising factorial x (x+1) ... (x+k-1); the empty product (k = 0) is 1."""
    if k < 0:
        raise ValueError("pochhammer order must be nonnegative")
    x = Fraction(x)
    out = Fraction(1)
    for i in range(k):
        out *= x + i
    return out


def rational_str(q: Fraction | int) -> str:
    """Canonical decimal form "p/q", or just "p" when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rational_from_str(s: str) -> Fraction:
    """Parse the canonical "p/q" (or plain "p") form back into a rational."""
    return Fraction(s)
