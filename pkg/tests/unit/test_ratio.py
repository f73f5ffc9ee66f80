"""Tests for the four k(d) routes."""

import math
from fractions import Fraction

import pytest
from scipy.integrate import quad

from cauchy_projection.errors import DomainError, RangeError
from cauchy_projection.ratio import (
    ExactRatio,
    RatioReport,
    k_closed,
    k_product,
    k_recursive,
    k_series,
    mean_abs_cosine,
    ratio_report,
    table,
)
from cauchy_projection.ratio.routes import check_table_range, relative_error
from cauchy_projection.special import ball_volume, sphere_surface


def rel(a, b):
    return abs(a - b) / abs(b)


class TestExactRatio:
    """Test cases for ExactRatio."""

    def test_to_real(self):
        """Test conversion with and without the 1/π factor."""
        assert ExactRatio(Fraction(1, 4), 0).to_real() == 0.25
        assert ExactRatio(Fraction(1), -1).to_real() == pytest.approx(1 / math.pi)

    def test_coerces_integers_to_fractions(self):
        """Test that an int q is stored as a Fraction."""
        ratio = ExactRatio(1, -1)
        assert isinstance(ratio.q, Fraction)

    @pytest.mark.parametrize("q", [Fraction(0), Fraction(-1, 2)])
    def test_rejects_non_positive_q(self, q):
        """Test that q must be positive."""
        with pytest.raises(DomainError, match="q must be positive"):
            ExactRatio(q, 0)

    @pytest.mark.parametrize("pi_exp", [1, -2])
    def test_rejects_other_pi_exponents(self, pi_exp):
        """Test that only π^0 and π^-1 are representable."""
        with pytest.raises(DomainError, match="pi_exp"):
            ExactRatio(Fraction(1, 2), pi_exp)

    @pytest.mark.parametrize(
        "d, text",
        [(2, "1/π"), (3, "1/4"), (4, "2/(3π)"), (5, "3/16"), (6, "8/(15π)")],
    )
    def test_str(self, d, text):
        """Test the rendering of exact values."""
        assert str(k_product(d)) == text

    def test_is_hashable_value(self):
        """Test that equal exact values compare and hash equal."""
        assert k_product(5) == ExactRatio(Fraction(3, 16), 0)
        assert len({k_product(5), ExactRatio(Fraction(6, 32), 0)}) == 1


class TestClosedForm:
    """Test cases for k_closed."""

    @pytest.mark.parametrize(
        "d, expected", [(2, 1 / math.pi), (3, 0.25), (5, 0.1875)]
    )
    def test_known_values(self, d, expected):
        """Test k(2) = 1/π, k(3) = 1/4 and k(5) = 3/16."""
        assert k_closed(d) == pytest.approx(expected, rel=1e-14)

    def test_equals_ball_over_sphere(self):
        """Test k(d) = V_(d−1) / S_d for d in [2, 64]."""
        for d in range(2, 65):
            assert rel(k_closed(d), ball_volume(d - 1) / sphere_surface(d)) <= 1e-12

    def test_strictly_decreasing(self):
        """Test k(d+1) < k(d) for d in [2, 63]."""
        values = [k_closed(d) for d in range(2, 65)]
        assert all(b < a for a, b in zip(values, values[1:]))

    def test_vanishes_for_large_d(self):
        """Test k(d) → 0 like 1/√d."""
        assert k_closed(10_000) < 0.01
        assert k_closed(10_000) == pytest.approx(
            1 / math.sqrt(2 * math.pi * 10_000), rel=1e-4
        )

    def test_recursion_identity(self):
        """Test k(d+1) · k(d) · 2πd = 1."""
        for d in range(2, 64):
            product = k_closed(d + 1) * k_closed(d) * 2 * math.pi * d
            assert abs(product - 1.0) <= 1e-12

    @pytest.mark.parametrize("d", [1, 0, 2.5, True])
    def test_domain_errors(self, d):
        """Test that d must be an integer of at least 2."""
        with pytest.raises(DomainError):
            k_closed(d)


class TestRecursive:
    """Test cases for k_recursive."""

    def test_anchor(self):
        """Test that d = 2 returns the anchor 1/π."""
        assert k_recursive(2) == 1 / math.pi

    def test_first_steps(self):
        """Test k(3) = 1/4 and k(4) = 1/(1.5π)."""
        assert k_recursive(3) == pytest.approx(0.25, rel=1e-15)
        assert k_recursive(4) == pytest.approx(1 / (1.5 * math.pi), rel=1e-14)

    def test_rejects_small_d(self):
        """Test that d < 2 is a domain error."""
        with pytest.raises(DomainError):
            k_recursive(1)


class TestProduct:
    """Test cases for k_product."""

    def test_base_cases(self):
        """Test k(2) = 1/π and k(3) = 1/4 exactly."""
        assert k_product(2) == ExactRatio(Fraction(1), -1)
        assert k_product(3) == ExactRatio(Fraction(1, 4), 0)

    def test_known_values(self):
        """Test k(4) = 2/(3π) and k(5) = 3/16."""
        assert k_product(4) == ExactRatio(Fraction(2, 3), -1)
        assert k_product(5) == ExactRatio(Fraction(3, 16), 0)
        assert k_product(5).to_real() == 0.1875

    def test_parity_selects_pi_exponent(self):
        """Test pi_exp = 0 for odd d and −1 for even d."""
        for d in range(2, 65):
            assert k_product(d).pi_exp == (0 if d % 2 else -1)

    def test_stays_exact_in_high_dimension(self):
        """Test that numerators and denominators grow without overflow."""
        ratio = k_product(64)
        assert ratio.q.denominator > 2**53
        assert 0.0 < ratio.to_real() <= 1 / math.pi

    def test_rejects_small_d(self):
        """Test that d < 2 is a domain error."""
        with pytest.raises(DomainError):
            k_product(1)


class TestRouteAgreement:
    """Cross-checks between the exact routes."""

    def test_pairwise_agreement(self):
        """Test closed, recursive and product routes agree within 1e-12."""
        for d in range(2, 65):
            closed = k_closed(d)
            assert rel(k_recursive(d), closed) <= 1e-12
            assert rel(k_product(d).to_real(), closed) <= 1e-12


class TestSeries:
    """Test cases for k_series."""

    def test_five_terms_at_d5(self):
        """Test the series is accurate to one part in ten thousand at d = 5."""
        assert rel(k_series(5, 5), 0.1875) <= 1e-4

    def test_error_bound_over_range(self):
        """Test |k_series(d, 5)/k(d) − 1| <= 1e-4 for d in [5, 64]."""
        worst = max(abs(k_series(d, 5) / k_closed(d) - 1) for d in range(5, 65))
        assert worst <= 1e-4

    def test_leading_term(self):
        """Test a single term is (2πd)^(−1/2)."""
        assert k_series(1000, 1) == pytest.approx(
            1 / math.sqrt(2 * math.pi * 1000), rel=1e-14
        )

    def test_large_d_accuracy(self):
        """Test agreement with the closed form at d = 100."""
        assert rel(k_series(100, 5), k_closed(100)) <= 1e-8

    def test_more_terms_help(self):
        """Test that five terms beat any shorter partial sum at d = 20."""
        errors = [abs(k_series(20, n) - k_closed(20)) for n in range(1, 6)]
        assert errors[-1] < errors[0]
        assert errors[-1] == min(errors)

    @pytest.mark.parametrize("n_terms", [0, 6, 2.0])
    def test_invalid_term_counts(self, n_terms):
        """Test that n_terms must be an integer in [1, 5]."""
        with pytest.raises(DomainError):
            k_series(5, n_terms)

    def test_rejects_small_d(self):
        """Test that d < 2 is a domain error."""
        with pytest.raises(DomainError):
            k_series(1, 1)


class TestMeanAbsCosine:
    """Test cases for mean_abs_cosine."""

    def test_three_dimensions(self):
        """Test the hemisphere quadrature of cos θ sin θ gives 1/2 in 3-d."""
        hemisphere, _ = quad(lambda t: math.cos(t) * math.sin(t), 0.0, math.pi / 2)
        sphere_weight, _ = quad(math.sin, 0.0, math.pi)
        assert mean_abs_cosine(3) == pytest.approx(
            2 * hemisphere / sphere_weight, rel=1e-12
        )
        assert mean_abs_cosine(3) == pytest.approx(0.5, rel=1e-14)

    @pytest.mark.parametrize("d", [2, 4, 5, 8])
    def test_polar_angle_quadrature(self, d):
        """Test E|cos θ| under the sin^(d−2) θ polar density."""
        def weight(t):
            return math.sin(t) ** (d - 2)

        numerator, _ = quad(
            lambda t: abs(math.cos(t)) * weight(t), 0.0, math.pi, points=[math.pi / 2]
        )
        denominator, _ = quad(weight, 0.0, math.pi)
        assert mean_abs_cosine(d) == pytest.approx(numerator / denominator, rel=1e-9)


class TestRatioReport:
    """Test cases for ratio_report."""

    def test_three_dimensions(self):
        """Test every route gives 1/4 at d = 3."""
        report = ratio_report(3)

        assert isinstance(report, RatioReport)
        assert report.closed == pytest.approx(0.25, rel=1e-15)
        assert report.recursive == pytest.approx(0.25, rel=1e-15)
        assert report.product == ExactRatio(Fraction(1, 4), 0)
        assert report.max_pairwise_rel_err <= 1e-12

    def test_series_only_from_d5(self):
        """Test the series is absent below d = 5 and present from there."""
        assert ratio_report(2).series is None
        assert ratio_report(4).series is None
        assert ratio_report(5).series == pytest.approx(0.1875, rel=1e-4)

    def test_d33(self):
        """Test the last printed table row."""
        report = ratio_report(33)
        assert round(report.closed, 3) == 0.070
        assert report.max_pairwise_rel_err <= 1e-12

    def test_propagates_domain_errors(self):
        """Test that invalid d raises."""
        with pytest.raises(DomainError):
            ratio_report(1)


class TestTable:
    """Test cases for table."""

    def test_printed_range(self):
        """Test 32 ordered rows with d = 10 and d = 20 as printed."""
        rows = table(2, 33)

        assert [d for d, _ in rows] == list(range(2, 34))
        values = dict(rows)
        assert round(values[10], 3) == 0.129
        assert round(values[20], 3) == 0.090

    def test_single_rows(self):
        """Test single-row tables."""
        assert table(3, 3) == [(3, pytest.approx(0.25))]
        assert table(2, 2) == [(2, pytest.approx(1 / math.pi))]

    @pytest.mark.parametrize(
        "d_min, d_max", [(5, 2), (1, 4), (2, 65), (0, 0)]
    )
    def test_range_errors(self, d_min, d_max):
        """Test that ranges outside 2 <= d_min <= d_max <= 64 are rejected."""
        with pytest.raises(RangeError):
            table(d_min, d_max)

    def test_range_error_is_domain_error(self):
        """Test the error hierarchy."""
        with pytest.raises(DomainError):
            check_table_range(2, 100)

    def test_rejects_non_integer_bounds(self):
        """Test that bounds must be integers."""
        with pytest.raises(RangeError, match="must be an integer"):
            check_table_range(2.0, 3)


class TestRelativeError:
    """Test cases for relative_error."""

    def test_both_zero(self):
        """Test that two zeros agree exactly."""
        assert relative_error(0.0, 0.0) == 0.0

    def test_symmetric(self):
        """Test scaling by the larger magnitude."""
        assert relative_error(1.0, 2.0) == relative_error(2.0, 1.0) == 0.5
