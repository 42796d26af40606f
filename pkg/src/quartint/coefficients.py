"""The rational coefficient family d_l(m) of the quartic-integral polynomial
P_m(a), its integer scaling b_l(m) = 2^(2m) d_l(m), and the forward
difference d_{l+1}(m) - d_l(m) in direct and closed forms.

The defining sum is

    d_l(m) = 2^(-2m) * sum_{k=l}^{m} 2^k C(2m-2k, m-k) C(m+k, m) C(k, l),

computed literally; 2^(2m) d_l(m) is an integer by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import binomial, rational_str
from .polynomial import Polynomial


@dataclass(frozen=True)
class CoefficientRow:
    """One full row (d_0(m), ..., d_m(m)); every entry is strictly positive."""

    m: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != self.m + 1:
            raise ValueError(f"row for m={self.m} must have {self.m + 1} entries")
        if any(v <= 0 for v in self.values):
            raise ValueError("coefficient rows are strictly positive")

    def scaled(self) -> tuple[int, ...]:
        """The integer row b_l(m) = 2^(2m) d_l(m)."""
        return _scaled_row(self.m)

    def as_strings(self) -> list[str]:
        return [rational_str(v) for v in self.values]

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, ell: int) -> Fraction:
        return self.values[ell]

    def __iter__(self):
        return iter(self.values)


@lru_cache(maxsize=None)
def _scaled_row(m: int) -> tuple[int, ...]:
    # The weights 2^k C(2m-2k, m-k) C(m+k, m) are shared by every l, so they
    # are computed once per row.
    weights = [2**k * binomial(2 * m - 2 * k, m - k) * binomial(m + k, m) for k in range(m + 1)]
    return tuple(
        sum(weights[k] * binomial(k, ell) for k in range(ell, m + 1)) for ell in range(m + 1)
    )


def d_coeff(m: int, ell: int) -> Fraction:
    """d_l(m) by literal summation, exact."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if not 0 <= ell <= m:
        raise ValueError(f"need 0 <= ell <= m, got ell={ell}, m={m}")
    return Fraction(_scaled_row(m)[ell], 4**m)


def coefficient_row(m: int) -> CoefficientRow:
    """All of (d_0(m), ..., d_m(m)) in one shot."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    scale = 4**m
    return CoefficientRow(m, tuple(Fraction(b, scale) for b in _scaled_row(m)))


def scaled_row(m: int) -> tuple[int, ...]:
    """The integer row b_l(m) = 2^(2m) d_l(m)."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return _scaled_row(m)


def poly_p(m: int) -> Polynomial:
    """P_m(a) = sum_l d_l(m) a^l as a dense polynomial."""
    return Polynomial(coefficient_row(m).values)


def delta_direct(m: int, ell: int) -> Fraction:
    """d_{l+1}(m) - d_l(m), straight from the row."""
    if not 0 <= ell <= m - 1:
        raise ValueError(f"need 0 <= ell <= m-1, got ell={ell}, m={m}")
    row = _scaled_row(m)
    return Fraction(row[ell + 1] - row[ell], 4**m)


def delta_closed(m: int, ell: int) -> Fraction:
    """The same difference through the single-sum closed form

    2^(-2m) C(m+l, m) sum_{k=l}^{m} 2^k C(2m-2k, m-k) C(m+k, m+l) (k-2l-1)/(l+1).
    """
    if not 0 <= ell <= m - 1:
        raise ValueError(f"need 0 <= ell <= m-1, got ell={ell}, m={m}")
    inner = sum(
        Fraction(2**k * binomial(2 * m - 2 * k, m - k) * binomial(m + k, m + ell) * (k - 2 * ell - 1), ell + 1)
        for k in range(ell, m + 1)
    )
    return Fraction(binomial(m + ell, m), 4**m) * inner
