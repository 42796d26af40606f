from fractions import Fraction

import pytest

from quartint.recurrence import (
    CERTIFICATE,
    D_SHIFT_REFERENCE,
    ac_limit,
    ac_ratio,
    b_identity_check,
    d_shift_check,
    d_shift_positivity,
    main_inequality_check,
    monotonicity_check,
    recurrence_residual,
)
from quartint.tfunction import t_direct


def test_certificate_shape():
    assert CERTIFICATE.a.degree == 9
    assert CERTIFICATE.b.degree == 9
    assert CERTIFICATE.c.degree == 9
    assert CERTIFICATE.d.degree == 7
    assert CERTIFICATE.a.leading_coefficient() == 9732096
    assert CERTIFICATE.b.leading_coefficient() == 15499264
    assert CERTIFICATE.c.leading_coefficient() == 5767168
    assert CERTIFICATE.d.leading_coefficient() == 1858560


def test_b_identity():
    assert b_identity_check()
    # spot checks on the extreme coefficients
    assert 7195230 + 3265920 - 799470 == 9661680
    assert 9732096 + 5767168 == 15499264


def test_residual_at_one_from_frozen_values():
    assert t_direct(1) == Fraction(1, 4)
    assert t_direct(2) == Fraction(1, 4)
    assert t_direct(3) == Fraction(67, 264)
    assert recurrence_residual(1) == 0


def test_residuals_vanish():
    for n in range(1, 26):
        assert recurrence_residual(n) == 0
    assert recurrence_residual(10) == 0
    with pytest.raises(ValueError):
        recurrence_residual(0)


def test_d_shift_expansion():
    coeffs = d_shift_positivity()
    assert coeffs[0] == 814627800
    assert coeffs[-1] == 1858560
    assert len(coeffs) == 8
    assert all(c > 0 for c in coeffs)
    assert tuple(coeffs) == D_SHIFT_REFERENCE
    assert d_shift_check() == (True, True)


def test_ac_ratio_and_limit():
    assert ac_limit() == Fraction(27, 16)
    assert all(ac_ratio(n) > 1 for n in range(2, 501))
    assert abs(ac_ratio(1000) - Fraction(27, 16)) < Fraction(1, 100)
    with pytest.raises(ValueError):
        ac_ratio(0)


def test_certificate_positivity():
    for n in range(1, 1001):
        assert CERTIFICATE.a(n) > 0
        assert CERTIFICATE.c(n) > 0


def test_main_inequality():
    for n in range(2, 201):
        assert main_inequality_check(n)


def test_monotonicity_report():
    report = monotonicity_check(40)
    assert report.passed
    assert report.counterexample is None
    assert any("T(1) = T(2)" in note for note in report.notes)
    assert any("strictly increasing" in note for note in report.notes)
    with pytest.raises(ValueError):
        monotonicity_check(2)
