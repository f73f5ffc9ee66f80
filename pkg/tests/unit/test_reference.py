"""Tests for the bundled printed k(d) table and the comparison rule."""

from decimal import Decimal

from cauchy_projection.ratio import (
    compare_with_reference,
    k_closed,
    load_reference_table,
    round_half_away,
    table,
)
from cauchy_projection.ratio.reference import ReferenceMismatch, printed_places


class TestRoundHalfAway:
    """Test cases for round_half_away."""

    def test_rounds_to_places(self):
        """Test ordinary rounding."""
        assert round_half_away(0.31830988618379, 3) == Decimal("0.318")
        assert round_half_away(0.1875, 4) == Decimal("0.1875")

    def test_exact_ties_go_away_from_zero(self):
        """Test that binary-exact ties round up in magnitude."""
        assert round_half_away(0.125, 2) == Decimal("0.13")
        assert round_half_away(-0.125, 2) == Decimal("-0.13")
        assert round_half_away(0.1875, 3) == Decimal("0.188")

    def test_keeps_trailing_zeros(self):
        """Test that the result has exactly the requested decimals."""
        assert str(round_half_away(0.25, 6)) == "0.250000"

    def test_large_values_keep_every_digit(self):
        """Test values that need more than 28 significant digits."""
        assert round_half_away(5.9e23, 6) == Decimal(5.9e23)
        assert str(round_half_away(2.0**100, 2)) == f"{2**100}.00"
        assert round_half_away(1e300, 15).adjusted() == 300


class TestReferenceTable:
    """Test cases for the bundled table."""

    def test_loads_all_printed_rows(self):
        """Test that rows d = 2..33 are present."""
        reference = load_reference_table()
        assert sorted(reference) == list(range(2, 34))

    def test_keeps_printed_strings(self):
        """Test that values keep the printed number of decimals."""
        reference = load_reference_table()
        assert reference[5] == "0.1875"
        assert reference[18] == "0.095"
        assert printed_places(reference[5]) == 4
        assert printed_places(reference[3]) == 3


class TestCompareWithReference:
    """Test cases for compare_with_reference."""

    def test_computed_table_matches(self):
        """Test that every printed row is reproduced."""
        assert compare_with_reference(table(2, 33)) == []

    def test_rows_outside_the_table_are_ignored(self):
        """Test that d > 33 has nothing to compare against."""
        assert compare_with_reference(table(34, 64)) == []

    def test_one_unit_tolerance(self):
        """Test that a one-unit disagreement in the last digit is accepted."""
        assert compare_with_reference([(3, 0.251)]) == []
        assert compare_with_reference([(3, 0.249)]) == []

    def test_reports_mismatch(self):
        """Test that a larger disagreement is reported with the rounded value."""
        mismatches = compare_with_reference([(3, 0.2531), (4, k_closed(4))])

        assert mismatches == [
            ReferenceMismatch(d=3, printed="0.250", computed=0.2531, rounded="0.253")
        ]

    def test_custom_reference(self):
        """Test comparison against a caller-supplied table."""
        reference = {7: "0.200"}
        mismatches = compare_with_reference([(7, k_closed(7))], reference)

        assert len(mismatches) == 1
        assert mismatches[0].printed == "0.200"

    def test_d5_checked_at_four_decimals(self):
        """Test that d = 5 is compared at the printed four decimals."""
        assert compare_with_reference([(5, 0.1877)]) == [
            ReferenceMismatch(d=5, printed="0.1875", computed=0.1877, rounded="0.1877")
        ]
