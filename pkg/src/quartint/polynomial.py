"""Dense polynomials over the exact rationals.

Coefficient index equals degree.  Trailing zeros are stripped on
construction, so the zero polynomial has an empty coefficient tuple and
degree -1.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Union

Scalar = Union[Fraction, int]


class Polynomial:
    """Immutable dense polynomial with Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coefficient(self, k: int) -> Fraction:
        """Coefficient of x^k, 0 beyond the degree."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __call__(self, x):
        """Horner evaluation; exact for int/Fraction x, float for float x."""
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if self.is_zero() or other.is_zero():
                return Polynomial()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Polynomial(out)
        return Polynomial(c * Fraction(other) for c in self.coeffs)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def derivative(self) -> "Polynomial":
        return Polynomial(Fraction(k) * c for k, c in enumerate(self.coeffs) if k >= 1)

    def antiderivative(self) -> "Polynomial":
        """Antiderivative with zero constant term."""
        return Polynomial([Fraction(0)] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    def integrate(self, lo: Scalar, hi: Scalar) -> Fraction:
        """Exact definite integral over [lo, hi] for rational endpoints."""
        anti = self.antiderivative()
        return anti(Fraction(hi)) - anti(Fraction(lo))

    def shift(self, c: Scalar) -> "Polynomial":
        """Compose with x -> x + c, expanded exactly."""
        c = Fraction(c)
        out = [Fraction(0)] * len(self.coeffs)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(i + 1):
                out[j] += a * comb(i, j) * c ** (i - j)
        return Polynomial(out)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"
