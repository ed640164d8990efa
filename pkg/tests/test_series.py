import pytest

from thagkl.bi_ring import h_sum_alphabets, h_y
from thagkl.errors import InvalidInputError, TruncationMismatchError
from thagkl.series import (
    TruncatedBiSeries,
    series_equal,
    series_multiply,
    series_substitute,
    verify_series_identities,
)

IDENTITY_NAMES = [
    "cycle-z-from-kl",
    "thagomizer-z-from-kl",
    "cycle-input-from-kl",
    "cycle-input-from-z",
    "substitution-invariance",
]


class TestTruncatedBiSeries:
    def test_terms_past_the_order_are_dropped(self):
        series = TruncatedBiSeries(2, {(0, 0): 1, (3, 1): 5})
        assert series == TruncatedBiSeries.one(2)

    def test_multiply_truncates(self):
        u = TruncatedBiSeries.monomial(2, 1)
        assert (u * u) == TruncatedBiSeries.monomial(2, 2)
        assert series_multiply(u * u, u).is_zero()

    def test_substitute(self):
        series = TruncatedBiSeries.monomial(3, 2, 0, h_y(1))
        assert series_substitute(series) == TruncatedBiSeries.monomial(3, 2, 2, h_y(1))
        assert series_substitute(series_substitute(series)) == series

    def test_substitution_can_leave_negative_t_degrees(self):
        series = TruncatedBiSeries.monomial(3, 1, 3)
        assert series.substitute().coefficient(1, -2) == 1

    def test_complete_series(self):
        series = TruncatedBiSeries.complete(3, "X+Y", t_weight=1)
        assert series.coefficient(2, 2) == h_sum_alphabets(2)
        assert series.coefficient(2, 0).is_zero()
        with pytest.raises(InvalidInputError):
            TruncatedBiSeries.complete(3, "Z")

    def test_complete_series_factor_over_alphabets(self):
        h_x_tu = TruncatedBiSeries.complete(6, "X", t_weight=1)
        h_y_tu = TruncatedBiSeries.complete(6, "Y", t_weight=1)
        assert h_x_tu * h_y_tu == TruncatedBiSeries.complete(6, "X+Y", t_weight=1)

    def test_elementary_series_alternates(self):
        series = TruncatedBiSeries.elementary(3, "Y", sign=-1)
        product = series * TruncatedBiSeries.complete(3, "Y")
        assert product == TruncatedBiSeries.one(3)

    def test_first_difference(self):
        a = TruncatedBiSeries.one(3)
        b = a + TruncatedBiSeries.monomial(3, 2, 1, h_y(2))
        assert a.first_difference(a) is None
        cell, diff = a.first_difference(b)
        assert cell == (2, 1)
        assert diff == -h_y(2)

    def test_mismatched_orders(self):
        with pytest.raises(TruncationMismatchError):
            TruncatedBiSeries.one(2) + TruncatedBiSeries.one(3)
        with pytest.raises(TruncationMismatchError):
            series_equal(TruncatedBiSeries.one(2), TruncatedBiSeries.one(3))

    def test_negative_u_degree(self):
        with pytest.raises(InvalidInputError):
            TruncatedBiSeries(2, {(-1, 0): 1})


class TestIdentities:
    @pytest.mark.parametrize("order", [3, 5])
    def test_all_pass(self, order):
        checks = verify_series_identities(order)
        assert [check.name for check in checks] == IDENTITY_NAMES
        assert all(check.passed for check in checks)

    @pytest.mark.slow
    def test_all_pass_to_nine(self):
        assert all(check.passed for check in verify_series_identities(9))

    @pytest.mark.slow
    def test_all_pass_at_the_largest_order(self):
        checks = verify_series_identities(12)
        assert [check.name for check in checks] == IDENTITY_NAMES
        assert all(check.passed for check in checks)

    def test_dropping_type_two_breaks_invariance(self):
        checks = {check.name: check for check in verify_series_identities(3, include_type_two=False)}
        assert not checks["substitution-invariance"].passed
        assert checks["thagomizer-z-from-kl"].passed
        failure = checks["substitution-invariance"].to_dict()
        assert failure["passed"] is False
        assert {"u", "t", "difference"} <= set(failure)

    @pytest.mark.parametrize("order", [1, 13])
    def test_order_guard(self, order):
        with pytest.raises(InvalidInputError):
            verify_series_identities(order)
