"""Floating-point cross-check of the quartic integral against its closed
form:

    int_0^inf dx / (x^4 + 2 a x^2 + 1)^(m+1)
        = pi / (2^(m+3/2) (a+1)^(m+1/2)) * P_m(a),   a > -1.

The improper range is folded onto the unit interval: substituting x -> 1/x
maps [1, inf) onto (0, 1] with integrand x^(4m+2) / (x^4 + 2 a x^2 + 1)^(m+1),
so the numeric side is two adaptive Gauss-Kronrod panels on (0, 1].  The
closed form keeps P_m(a) exact until the final float conversion, which keeps
quadrature error separated from coefficient error.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from fractions import Fraction

from .coefficients import poly_p


class DivergentIntegralError(ValueError):
    """a <= -1 makes the integrand non-integrable."""


class QuadratureConvergenceError(RuntimeError):
    """The error target was not reached within the evaluation budget."""


# 15-point Kronrod nodes with the embedded 7-point Gauss rule on [-1, 1];
# zero Gauss weight marks Kronrod-only nodes.
_GK15 = (
    (+0.991455371120813, 0.000000000000000, 0.022935322010529),
    (-0.991455371120813, 0.000000000000000, 0.022935322010529),
    (+0.949107912342759, 0.129484966168870, 0.063092092629979),
    (-0.949107912342759, 0.129484966168870, 0.063092092629979),
    (+0.864864423359769, 0.000000000000000, 0.104790010322250),
    (-0.864864423359769, 0.000000000000000, 0.104790010322250),
    (+0.741531185599394, 0.279705391489277, 0.140653259715525),
    (-0.741531185599394, 0.279705391489277, 0.140653259715525),
    (+0.586087235467691, 0.000000000000000, 0.169004726639267),
    (-0.586087235467691, 0.000000000000000, 0.169004726639267),
    (+0.405845151377397, 0.381830050505119, 0.190350578064785),
    (-0.405845151377397, 0.381830050505119, 0.190350578064785),
    (+0.207784955007898, 0.000000000000000, 0.204432940075298),
    (-0.207784955007898, 0.000000000000000, 0.204432940075298),
    (0.000000000000000, 0.417959183673469, 0.209482141084728),
)


def _panel(f, lo: float, hi: float) -> tuple[float, float]:
    """One Gauss-Kronrod pass over [lo, hi]: (Kronrod value, error estimate)."""
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    gauss = 0.0
    kronrod = 0.0
    for node, wg, wk in _GK15:
        fx = f(mid + half * node)
        gauss += wg * fx
        kronrod += wk * fx
    gauss *= half
    kronrod *= half
    # QUADPACK-style rescaled estimate; conservative for smooth integrands.
    diff = abs(kronrod - gauss)
    err = min(diff, (200.0 * diff) ** 1.5) if diff > 0 else 0.0
    return kronrod, err


def _adaptive(f, lo: float, hi: float, tol: float, budget: int) -> tuple[float, float, int]:
    """Refine the worst panel until the summed error estimate drops below
    tol; returns (value, error estimate, evaluations)."""
    value, err = _panel(f, lo, hi)
    evaluations = 15
    # max-heap on error via negation; counter breaks ties deterministically
    heap = [(-err, 0, lo, hi, value, err)]
    counter = 1
    total_err = err
    while total_err > tol:
        if evaluations + 30 > budget:
            raise QuadratureConvergenceError(
                f"error estimate {total_err:.3e} still above tol {tol:.3e} "
                f"after {evaluations} evaluations"
            )
        _, _, a, b, v, e = heapq.heappop(heap)
        mid = 0.5 * (a + b)
        v1, e1 = _panel(f, a, mid)
        v2, e2 = _panel(f, mid, b)
        evaluations += 30
        value += v1 + v2 - v
        total_err += e1 + e2 - e
        heapq.heappush(heap, (-e1, counter, a, mid, v1, e1))
        heapq.heappush(heap, (-e2, counter + 1, mid, b, v2, e2))
        counter += 2
    return value, total_err, evaluations


def quartic_integral_numeric(m: int, a: float, tol: float, budget: int = 200_000) -> float:
    """Adaptive quadrature of the quartic integral for a > -1."""
    value, _, _ = _integrate(m, a, tol, budget)
    return value


def _integrate(m: int, a: float, tol: float, budget: int) -> tuple[float, float, int]:
    if m < 0:
        raise ValueError("m must be nonnegative")
    if not a > -1:
        raise DivergentIntegralError(f"integral diverges for a = {a} <= -1")
    if not tol > 0:
        raise ValueError("tol must be positive")
    a = float(a)
    power = m + 1

    def head(x: float) -> float:
        x2 = x * x
        return (x2 * x2 + 2.0 * a * x2 + 1.0) ** -power

    def tail(x: float) -> float:
        # x -> 1/x image of the [1, inf) part
        x2 = x * x
        return x ** (4 * m + 2) * (x2 * x2 + 2.0 * a * x2 + 1.0) ** -power

    v1, e1, n1 = _adaptive(head, 0.0, 1.0, 0.5 * tol, budget)
    v2, e2, n2 = _adaptive(tail, 0.0, 1.0, 0.5 * tol, budget)
    return v1 + v2, e1 + e2, n1 + n2


def closed_form(m: int, a) -> float:
    """pi / (2^(m+3/2) (a+1)^(m+1/2)) * P_m(a), with P_m evaluated exactly at
    the (rational) argument and converted to float only at the end."""
    a_exact = Fraction(a)  # exact also for float input
    if not a_exact > -1:
        raise ValueError(f"closed form requires a > -1, got a = {a}")
    p_value = poly_p(m)(a_exact)
    prefactor = math.pi / (2.0 ** (m + 1.5) * float(a_exact + 1) ** (m + 0.5))
    return prefactor * float(p_value)


@dataclass(frozen=True)
class QuadratureResult:
    m: int
    a: float
    numeric: float
    closed_form: float
    relative_error: float
    evaluations: int

    def to_jsonable(self) -> dict:
        return {
            "m": self.m,
            "a": self.a,
            "numeric": self.numeric,
            "closed_form": self.closed_form,
            "relative_error": self.relative_error,
            "evaluations": self.evaluations,
        }


def evaluate_quartic_integral(m: int, a, tol: float, budget: int = 200_000) -> QuadratureResult:
    """Numeric value, closed form, and their relative error in one record."""
    numeric, _, evaluations = _integrate(m, float(a), tol, budget)
    exact = closed_form(m, a)
    rel = abs(numeric - exact) / abs(exact)
    return QuadratureResult(m, float(a), numeric, exact, rel, evaluations)
