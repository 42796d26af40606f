"""Terminating Gauss 2F1 series evaluated exactly at rational arguments,
their dense polynomial form, the derivative and contiguous identities linking
neighbouring parameter triples, and the 3^(-k) ratio bounds used to control
the series tails.

A series terminates when the upper parameter b is a nonpositive integer; the
truncation order is N = -b and the value is the finite sum

    sum_{k=0}^{N} (a)_k (b)_k / ((c)_k k!) z^k.

Evaluation walks the running-term recurrence
term_{k+1} = term_k (a+k)(b+k) z / ((c+k)(k+1)) instead of recomputing
rising factorials, after checking up front that (c)_k never vanishes before
the truncation point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import pochhammer
from .polynomial import Polynomial


class HypergeometricError(ValueError):
    """Base for invalid terminating-series requests."""


class NonTerminatingSeriesError(HypergeometricError):
    """The upper parameter b is not a nonpositive integer."""


class SeriesPoleError(HypergeometricError):
    """(c)_k vanishes at or before the truncation point."""


@dataclass(frozen=True)
class Hyp2F1Spec:
    """Parameter triple (a, b; c) with rational argument z."""

    a: Fraction
    b: Fraction
    c: Fraction
    z: Fraction

    @classmethod
    def of(cls, a, b, c, z) -> "Hyp2F1Spec":
        return cls(Fraction(a), Fraction(b), Fraction(c), Fraction(z))

    def truncation_order(self) -> int:
        """N = -b, after checking b is a nonpositive integer and that the
        denominator parameter has no pole before the series truncates."""
        return _validated_order(self.a, self.b, self.c)


def _validated_order(a: Fraction, b: Fraction, c: Fraction) -> int:
    if b.denominator != 1 or b > 0:
        raise NonTerminatingSeriesError(f"upper parameter b={b} is not a nonpositive integer")
    n = -int(b)
    for j in range(n):
        if c + j == 0:
            raise SeriesPoleError(f"(c)_k vanishes at k={j + 1} before truncation {n} (c={c})")
    return n


def hyp2f1_terminating(spec: Hyp2F1Spec) -> Fraction:
    """Exact value of the terminating series."""
    n = spec.truncation_order()
    total = Fraction(1)
    term = Fraction(1)
    for k in range(n):
        term *= Fraction((spec.a + k) * (spec.b + k) * spec.z, (spec.c + k) * (k + 1))
        total += term
    return total


def hyp2f1(a, b, c, z) -> Fraction:
    """Convenience wrapper: exact terminating 2F1(a, b; c; z)."""
    return hyp2f1_terminating(Hyp2F1Spec.of(a, b, c, z))


def hyp2f1_as_polynomial(a, b, c) -> Polynomial:
    """The terminating series as a polynomial in z; coefficient k is
    (a)_k (b)_k / ((c)_k k!)."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    n = _validated_order(a, b, c)
    coeffs = [Fraction(1)]
    term = Fraction(1)
    for k in range(n):
        term *= Fraction((a + k) * (b + k), (c + k) * (k + 1))
        coeffs.append(term)
    return Polynomial(coeffs)


def derivative_relation_check(a, b, c) -> bool:
    """d/dz 2F1(a,b;c;z) = (ab/c) 2F1(a+1,b+1;c+1;z), as exact polynomials."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    left = hyp2f1_as_polynomial(a, b, c).derivative()
    if b == 0:
        return left.is_zero()
    right = Fraction(a * b, c) * hyp2f1_as_polynomial(a + 1, b + 1, c + 1)
    return left == right


def contiguous_relation_check(a, b, c, z) -> bool:
    """2F1(a+1,b;c;z) = 2F1(a,b;c;z) + (bz/c) 2F1(a+1,b+1;c+1;z), exactly."""
    a, b, c, z = Fraction(a), Fraction(b), Fraction(c), Fraction(z)
    lhs = hyp2f1(a + 1, b, c, z)
    rhs = hyp2f1(a, b, c, z)
    if b != 0:
        rhs += Fraction(b * z, c) * hyp2f1(a + 1, b + 1, c + 1, z)
    return lhs == rhs


def one_f_zero(a, z: float) -> float:
    """1F0(a; z) = (1-z)^(-a) for |z| < 1, in floating point.

    Only used for limit diagnostics; everything comparable exactly stays
    exact elsewhere.
    """
    if not abs(z) < 1:
        raise ValueError(f"1F0 requires |z| < 1, got z={z}")
    return (1.0 - z) ** (-float(Fraction(a)))


def pochhammer_ratio_bound_check(m: int) -> bool:
    """b_k = 3^k (1-m)_k / (2-4m)_k stays in (0, 1] and never increases,
    for 1 <= k <= m-1.

    This is the bound (1-m)_k/(2-4m)_k <= 3^(-k) behind the integrand
    envelope.
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    prev = Fraction(1)
    for k in range(1, m):
        b_k = 3**k * Fraction(pochhammer(Fraction(1 - m), k), pochhammer(Fraction(2 - 4 * m), k))
        if not (0 < b_k <= 1 and b_k <= prev):
            return False
        prev = b_k
    return True


def companion_ratio_bound_violations(m: int) -> list[int]:
    """All k in 0..m+1 where (-1-m)_k / (-4m)_k exceeds 3^(-k).

    The bound holds for every m >= 3; at m = 2 it fails at exactly k = 1
    (the ratio is 3/8 > 1/3), which callers surface rather than hide.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    bad = []
    ratio = Fraction(1)
    for k in range(0, m + 2):
        if k > 0:
            ratio *= Fraction(-1 - m + (k - 1), -4 * m + (k - 1))
        if ratio > Fraction(1, 3**k):
            bad.append(k)
    return bad


def envelope_bound_check(m: int, t) -> bool:
    """[2F1(5/2, 1-m; 2-4m; t)]^2 (3-t)^5 <= 243 for rational t in [0, 2].

    Both sides are rational (243 = (9 sqrt 3)^2), so the comparison is exact.
    Equality is attained at t = 0.
    """
    t = Fraction(t)
    if m < 2:
        raise ValueError("m must be at least 2")
    if not 0 <= t <= 2:
        raise ValueError("t must lie in [0, 2]")
    value = hyp2f1(Fraction(5, 2), 1 - m, 2 - 4 * m, t)
    return value * value * (3 - t) ** 5 <= 243


def difference_identity_check(m: int) -> bool:
    """(m+1)/(4m) 2F1(3/2,-m;1-4m;2) equals
    [2F1(3/2,-1-m;-4m;2) - 2F1(1/2,-1-m;-4m;2)] / 2, exactly.

    This is the contiguous relation specialised at z = 2; it rewrites the
    second series in the T(m) representation as a half difference.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    lhs = Fraction(m + 1, 4 * m) * hyp2f1(Fraction(3, 2), -m, 1 - 4 * m, 2)
    rhs = (hyp2f1(Fraction(3, 2), -1 - m, -4 * m, 2) - hyp2f1(Fraction(1, 2), -1 - m, -4 * m, 2)) / 2
    return lhs == rhs
