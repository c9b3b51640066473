import math
from fractions import Fraction

import pytest

from slowseq import (
    char_poly,
    dominant_root,
    empirical_ratio,
    growth_constant_estimate,
    limit_ratio,
    parse_recurrence,
)

PHI = (1 + math.sqrt(5)) / 2


def test_char_poly_coefficients():
    poly = char_poly(parse_recurrence("1,2,0,3"))
    assert poly.coefficients == (1, -1, -2, 0, -3)
    assert poly(1) == 1 - 6


def test_dominant_root_golden():
    assert dominant_root(parse_recurrence("2")) == pytest.approx(2.0, abs=1e-12)
    assert dominant_root(parse_recurrence("1,1")) == pytest.approx(
        PHI, abs=1e-10
    )
    assert dominant_root(parse_recurrence("1,2,0,3")) == pytest.approx(
        2.1949, abs=1e-4
    )


def test_root_is_in_bracket():
    for text in ("2", "3", "1,1", "1,0,1", "2,1", "1,2,0,3"):
        rec = parse_recurrence(text)
        kappa = dominant_root(rec)
        assert 1.0 < kappa <= rec.total
        assert abs(char_poly(rec)(kappa)) < 1e-6 * rec.total**rec.order


def test_limit_ratio():
    assert limit_ratio(parse_recurrence("2")) == pytest.approx(0.5)
    assert limit_ratio(parse_recurrence("1,1")) == pytest.approx(
        1 - 1 / PHI, abs=1e-10
    )


def test_empirical_ratio_small():
    rec = parse_recurrence("2")
    # Conolly: C(2^k) = 2^(k-1) + 1
    assert empirical_ratio(rec, 0, 1024) == Fraction(513, 1024)


def test_growth_constant_fibonacci():
    rec = parse_recurrence("1,1")
    # terms are shifted Fibonacci numbers, so a_n / phi^n -> phi^2 / sqrt(5)
    expected = PHI**2 / math.sqrt(5)
    assert growth_constant_estimate(rec, 60) == pytest.approx(
        expected, abs=1e-9
    )


def test_growth_constant_large_index():
    rec = parse_recurrence("2")
    assert growth_constant_estimate(rec, 2000) == pytest.approx(1.0, rel=1e-6)
