"""The tail sum T(m) that settles unimodality of the coefficient rows,
computed through four independent routes:

  direct          T(m) = sum_{r=2}^{m+1} C(2r,r) C(m+1,r) (r-1) / (2^r C(4m,r))
  hypergeometric  T(m) = 1 - 2F1(1/2,-1-m;-4m;2) + (m+1)/(4m) 2F1(3/2,-m;1-4m;2)
  integral        T(m) = 3(m+1)/(16(4m-1)) * int_0^2 t 2F1(5/2,1-m;2-4m;t) dt
  weighted sum    T(m) = [x W'(x) - W(x) + 1] at x = 1/2

together with the partial sums S_{m,l}, the four-stage inequality chain they
normalise, the r-term bounds behind T(m) < 1, and float diagnostics for the
limit (2 - sqrt 2)/2.

Every route is exact rational arithmetic; the only floats here are the limit
gaps, which involve sqrt 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import binomial, rational_str
from .hypergeometric import hyp2f1, hyp2f1_as_polynomial
from .polynomial import Polynomial

# Limit of T(m), and the early incorrect guess 1 - ln 2 kept as a second
# diagnostic constant for context.
T_LIMIT = (2.0 - math.sqrt(2.0)) / 2.0
T_LIMIT_HISTORICAL_GUESS = 1.0 - math.log(2.0)


def s_sum(m: int, ell: int) -> Fraction:
    """S_{m,l} = sum_{k=l}^{2l} C(m-l,m-k) C(m+k,2k) / C(2m,2k) * (2l+1-k)/2^(m-k)."""
    if not 0 <= ell <= m:
        raise ValueError(f"need 0 <= ell <= m, got ell={ell}, m={m}")
    total = Fraction(0)
    for k in range(ell, 2 * ell + 1):
        num = binomial(m - ell, m - k) * binomial(m + k, 2 * k) * (2 * ell + 1 - k)
        if num == 0:
            continue
        total += Fraction(num, binomial(2 * m, 2 * k) * 2 ** (m - k))
    return total


@lru_cache(maxsize=None)
def t_direct(m: int) -> Fraction:
    """T(m) by its defining sum, accumulated over one common denominator."""
    if m < 1:
        raise ValueError("t_direct requires m >= 1")
    # Common denominator 2^(m+1) * (4m)(4m-1)...(3m-1); each term scales to an
    # integer, so the whole sum reduces exactly once at the end.
    falling = [1] * (m + 2)  # falling[r] = (4m)(4m-1)...(4m-r+1)
    for r in range(1, m + 2):
        falling[r] = falling[r - 1] * (4 * m - r + 1)
    total = 0
    r_factorial = 2
    for r in range(2, m + 2):
        a_r = binomial(2 * r, r) * binomial(m + 1, r) * (r - 1)
        total += a_r * r_factorial * (falling[m + 1] // falling[r]) * 2 ** (m + 1 - r)
        r_factorial *= r + 1
    return Fraction(total, 2 ** (m + 1) * falling[m + 1])


def t_hypergeometric(m: int) -> Fraction:
    """T(m) from the two-series representation."""
    if m < 1:
        raise ValueError("t_hypergeometric requires m >= 1")
    first = hyp2f1(Fraction(1, 2), -1 - m, -4 * m, 2)
    second = hyp2f1(Fraction(3, 2), -m, 1 - 4 * m, 2)
    return 1 - first + Fraction(m + 1, 4 * m) * second


def t_integral(m: int) -> Fraction:
    """T(m) from the integral route, with the degree-(m-1) integrand
    integrated term by term so the identity stays exact."""
    if m < 1:
        raise ValueError("t_integral requires m >= 1")
    integrand = hyp2f1_as_polynomial(Fraction(5, 2), 1 - m, 2 - 4 * m)
    # int_0^2 t * sum c_k t^k dt = sum c_k 2^(k+2) / (k+2)
    value = sum(c * Fraction(2 ** (k + 2), k + 2) for k, c in enumerate(integrand.coeffs))
    return integral_prefactor(m) * value


def integral_prefactor(m: int) -> Fraction:
    """3(m+1) / (16(4m-1)); bounded by 9/112 for m >= 2."""
    if m < 1:
        raise ValueError("m must be at least 1")
    return Fraction(3 * (m + 1), 16 * (4 * m - 1))


def w_polynomial(m: int) -> Polynomial:
    """W_m(x) = sum_{r=0}^{m+1} C(2r,r) C(m+1,r) / C(4m,r) x^r."""
    if m < 1:
        raise ValueError("w_polynomial requires m >= 1")
    return Polynomial(
        Fraction(binomial(2 * r, r) * binomial(m + 1, r), binomial(4 * m, r)) for r in range(m + 2)
    )


def w_function(m: int, x) -> Fraction:
    """W_m at a rational point, evaluated from the sum and cross-checked
    against the equivalent series 2F1(1/2, -1-m; -4m; 4x)."""
    x = Fraction(x)
    from_sum = w_polynomial(m)(x)
    from_series = hyp2f1(Fraction(1, 2), -1 - m, -4 * m, 4 * x)
    if from_sum != from_series:
        raise ArithmeticError(f"W_{m}({x}): sum form {from_sum} != series form {from_series}")
    return from_sum


def t_via_w(m: int) -> Fraction:
    """T(m) = x W'(x) - W(x) + 1 at x = 1/2, with the exact polynomial
    derivative.

    The superficially similar combination W'(1/2)/2 - W(1/2) (see
    t_via_w_variant) does not reproduce T(m); this corrected form does, for
    every m, and the two are reported together so the difference is visible.
    """
    w = w_polynomial(m)
    half = Fraction(1, 2)
    return half * w.derivative()(half) - w(half) + 1


def t_via_w_variant(m: int) -> Fraction:
    """(1/2) W'(1/2) - W(1/2), the uncorrected combination.

    At m = 1 this gives -3/4 where T(1) = 1/4; kept only so reports can show
    both values.
    """
    w = w_polynomial(m)
    half = Fraction(1, 2)
    return half * w.derivative()(half) - w(half)


def bound_pair_check(m: int, r: int) -> bool:
    """C(2r,r) C(m+1,r) <= C(4m,r) for 2 <= r <= m+1, the induction step
    behind T(m) < 1."""
    if not 2 <= r <= m + 1:
        raise ValueError(f"need 2 <= r <= m+1, got r={r}, m={m}")
    return binomial(2 * r, r) * binomial(m + 1, r) <= binomial(4 * m, r)


def geometric_tail_bound(m: int) -> Fraction:
    """sum_{r=2}^{m+1} (r-1)/2^r = 1 - (m+2)/2^(m+1), the envelope that
    dominates T(m) once every binomial ratio is replaced by 1."""
    if m < 1:
        raise ValueError("m must be at least 1")
    total = sum(Fraction(r - 1, 2**r) for r in range(2, m + 2))
    closed = 1 - Fraction(m + 2, 2 ** (m + 1))
    if total != closed:
        raise ArithmeticError("geometric tail bound: sum and closed form disagree")
    return total


@dataclass(frozen=True)
class InequalityChain:
    """The four nested inequalities whose truth gives the positive-difference
    half of unimodality, strongest last.  All three right-hand sides bound the
    same left-hand sum; S_{m,l} is that sum normalised by the final bound."""

    m: int
    ell: int
    lhs: int
    rhs_full: int
    rhs_unweighted: int
    rhs_last_term: int
    s_value: Fraction

    @property
    def task1(self) -> bool:
        return self.lhs < self.rhs_full

    @property
    def task2(self) -> bool:
        return self.lhs < self.rhs_unweighted

    @property
    def task3(self) -> bool:
        return self.lhs < self.rhs_last_term

    @property
    def task4(self) -> bool:
        return self.s_value < 1

    def all_hold(self) -> bool:
        return self.task1 and self.task2 and self.task3 and self.task4


def inequality_chain_check(m: int, ell: int) -> InequalityChain:
    """Evaluate both sides of all four inequalities exactly, checking on the
    way that the right sides really do weaken in order (last term <=
    unweighted sum <= weighted sum) and that S_{m,l} is the normalised form
    of the strongest one."""
    if not 0 <= ell < m // 2:
        raise ValueError(f"need 0 <= ell < floor(m/2), got ell={ell}, m={m}")
    lhs = sum(
        2**k * (2 * ell + 1 - k) * binomial(2 * m - 2 * k, m - k) * binomial(m + k, m + ell)
        for k in range(ell, 2 * ell + 1)
    )
    rhs_full = sum(
        2**k * (k - 2 * ell - 1) * binomial(2 * m - 2 * k, m - k) * binomial(m + k, m + ell)
        for k in range(2 * ell + 2, m + 1)
    )
    rhs_unweighted = sum(
        2**k * binomial(2 * m - 2 * k, m - k) * binomial(m + k, m + ell)
        for k in range(2 * ell + 2, m + 1)
    )
    rhs_last_term = 2**m * binomial(2 * m, m + ell)
    s_value = s_sum(m, ell)
    if not rhs_last_term <= rhs_unweighted <= rhs_full:
        raise ArithmeticError(f"strengthening chain out of order at (m={m}, ell={ell})")
    if s_value * rhs_last_term != lhs:
        raise ArithmeticError(f"S_{{{m},{ell}}} is not lhs/rhs_last_term")
    return InequalityChain(m, ell, lhs, rhs_full, rhs_unweighted, rhs_last_term, s_value)


def limit_gap(m: int) -> float:
    """(2 - sqrt 2)/2 - T(m), in floating point; positive and shrinking as
    T(m) climbs toward the limit."""
    return T_LIMIT - float(t_direct(m))


@dataclass(frozen=True)
class TValueBundle:
    """T(m) through every exact route plus the float limit gap."""

    m: int
    direct: Fraction
    hypergeometric: Fraction
    integral: Fraction
    limit_gap: float

    def to_jsonable(self) -> dict:
        return {
            "m": self.m,
            "direct": rational_str(self.direct),
            "hypergeometric": rational_str(self.hypergeometric),
            "integral": rational_str(self.integral),
            "approx": float(self.direct),
            "limit_gap": self.limit_gap,
        }


def t_bundle(m: int) -> TValueBundle:
    """All representations of T(m); raises if any two disagree."""
    direct = t_direct(m)
    hyp = t_hypergeometric(m)
    integral = t_integral(m)
    if not direct == hyp == integral:
        raise ArithmeticError(f"T({m}) representations disagree: {direct}, {hyp}, {integral}")
    return TValueBundle(m, direct, hyp, integral, limit_gap(m))
