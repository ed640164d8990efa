import pytest
import sympy

from thagkl.bi_ring import (
    T,
    BiSchurPoly,
    GradedBiSchur,
    bischur,
    dimension_poly,
    e_doubled,
    e_sum_alphabets,
    e_x,
    embed,
    h_scaled_x,
    h_sum_alphabets,
    h_twisted,
    h_x,
    h_y,
    integer_poly,
    is_palindromic,
    merge_alphabets,
    restrict_to_symmetric,
)
from thagkl.errors import InvalidInputError, MixedDegreeError
from thagkl.partitions import Bipartition
from thagkl.schur_ring import schur


def test_alphabets_multiply_independently():
    product = bischur((1,), ()) * bischur((), (1,))
    assert product == bischur((1,), (1,))
    assert bischur((1,)) * bischur((1,)) == bischur((2,)) + bischur((1, 1))


def test_embed_and_sum_alphabets():
    assert embed(schur(2), "Y") == h_y(2)
    assert h_sum_alphabets(1) == h_x(1) + h_y(1)
    assert e_sum_alphabets(2) == bischur((1, 1), ()) + bischur((1,), (1,)) + bischur((), (1, 1))
    with pytest.raises(InvalidInputError):
        embed(schur(1), "Z")


def test_e_doubled_two():
    value = e_doubled(2)
    assert value.coefficient(((1, 1), ())) == 3
    assert value.coefficient(((2,), ())) == 1
    assert value.coefficient(((1,), (1,))) == 2
    assert value.coefficient(((), (1, 1))) == 1
    assert len(value) == 4


@pytest.mark.parametrize("n", range(1, 9))
def test_two_alphabet_alternating_sum_vanishes(n):
    total = BiSchurPoly.zero()
    for b in range(n + 1):
        total = total + (h_sum_alphabets(n - b) * e_sum_alphabets(b)).scale((-1) ** b)
    assert total.is_zero()


@pytest.mark.parametrize("n", range(9))
def test_e_doubled_splits_off_one_copy_of_x(n):
    expected = BiSchurPoly.zero()
    for j in range(n + 1):
        expected = expected + e_x(j) * e_sum_alphabets(n - j)
    assert e_doubled(n) == expected


def test_bidegrees():
    poly = bischur((2,), (1,)) + bischur((), (3,))
    assert poly.bidegrees() == {(2, 1), (0, 3)}
    assert poly.degrees() == {3}


class TestGradedBiSchur:
    def test_zero_has_degree_minus_one(self):
        assert GradedBiSchur.zero().degree == -1
        assert GradedBiSchur.zero().is_zero()
        assert not GradedBiSchur.zero()

    def test_zero_coefficients_are_dropped(self):
        g = GradedBiSchur({0: h_x(1), 3: BiSchurPoly.zero()})
        assert g.degree == 0
        assert g.degrees() == [0]

    def test_negative_degrees_rejected(self):
        with pytest.raises(InvalidInputError):
            GradedBiSchur({-1: h_x(1)})

    def test_shift_and_arithmetic(self):
        g = GradedBiSchur.constant(h_x(1)).shift(2)
        assert g.coefficient(2) == h_x(1)
        assert g.coefficient(0).is_zero()
        assert (g - g).is_zero()
        assert g + 1 == GradedBiSchur({0: 1, 2: h_x(1)})

    def test_t_minus_one_squared(self):
        square = GradedBiSchur.t_minus_one() * GradedBiSchur.t_minus_one()
        assert square == GradedBiSchur({2: 1, 1: -2, 0: 1})

    def test_scalar_and_ring_multiplication(self):
        g = GradedBiSchur.monomial(1, h_y(1))
        assert (g * 3).coefficient(1) == h_y(1).scale(3)
        assert (g * h_y(1)).coefficient(1) == h_y(2) + bischur((), (1, 1))

    def test_items_are_sorted(self):
        g = GradedBiSchur({2: h_x(2), 0: 1, 1: h_y(1)})
        assert [d for d, _ in g.items()] == [0, 1, 2]


class TestPlethysticHelpers:
    def test_h_scaled_x_one(self):
        assert h_scaled_x(1) == GradedBiSchur({1: h_x(1), 0: -h_x(1)})

    def test_h_scaled_x_dimension_is_power_of_t_minus_one(self):
        for m in range(5):
            assert dimension_poly(h_scaled_x(m)) == sympy.Poly((T - 1) ** m, T, domain="ZZ")

    def test_h_twisted_one(self):
        expected = GradedBiSchur({1: h_x(1), 0: -h_x(1) - h_y(1)})
        assert h_twisted(1) == expected

    def test_negative_sizes(self):
        for func in (h_sum_alphabets, e_sum_alphabets, e_doubled, h_scaled_x, h_twisted):
            with pytest.raises(InvalidInputError):
                func(-1)


class TestDimensionPoly:
    def test_dimension_of_simple_polynomial(self):
        g = GradedBiSchur({0: bischur((2,)), 1: bischur((1,), (1,))})
        assert dimension_poly(g) == integer_poly({0: 1, 1: 2})

    def test_zero_polynomial(self):
        assert dimension_poly(GradedBiSchur.zero()).is_zero

    def test_mixed_degrees_rejected(self):
        with pytest.raises(MixedDegreeError):
            dimension_poly(GradedBiSchur({0: h_x(1) + h_x(2)}))


def test_is_palindromic():
    g = GradedBiSchur({0: h_x(1), 1: h_y(1), 2: h_x(1)})
    assert is_palindromic(g, 2)
    assert not is_palindromic(g, 3)
    assert not is_palindromic(GradedBiSchur({0: h_x(1)}), 1)
    with pytest.raises(InvalidInputError):
        is_palindromic(g, -1)


def test_restriction_to_symmetric_group():
    assert merge_alphabets(bischur((1,), (1,))) == bischur((2,)) + bischur((1, 1))
    g = GradedBiSchur({0: h_x(2), 1: h_y(2)})
    assert restrict_to_symmetric(g) == GradedBiSchur({0: h_x(2), 1: h_x(2)})
    assert merge_alphabets(BiSchurPoly({Bipartition((), ()): 5})) == BiSchurPoly.one().scale(5)
