import pytest

from thagkl.bi_ring import h_sum_alphabets, h_x
from thagkl.errors import InvalidInputError
from thagkl.thagomizer_model import (
    SPINE,
    FlatKind,
    SignedPermutation,
    carry_to_representative,
    chromatic_check,
    classify_flat,
    cycle_graph,
    expected_flat_count,
    flats_of_cycle,
    flats_of_thagomizer,
    graphic_flats,
    hyperoctahedral_order,
    orbit_decomposition,
    orbit_size,
    spike,
    spike_a,
    spike_b,
    stabilizer_order,
    thagomizer_graph,
)


@pytest.mark.parametrize("n", range(5))
def test_flat_count(n):
    lattice = flats_of_thagomizer(n)
    assert len(lattice) == expected_flat_count(n) == 3**n + 2**n
    assert lattice.rank == n + 1


def test_flats_of_thagomizer_guard():
    with pytest.raises(InvalidInputError):
        flats_of_thagomizer(-1)
    with pytest.raises(InvalidInputError):
        flats_of_thagomizer(9)


def test_cycle_flats():
    lattice = flats_of_cycle(5)
    # subsets of size at most 3, plus the whole edge set
    assert len(lattice) == 1 + 5 + 10 + 10 + 1
    assert lattice.rank == 4
    with pytest.raises(InvalidInputError):
        flats_of_cycle(1)


class TestOrbits:
    @pytest.mark.parametrize("n", range(6))
    def test_orbit_sizes_cover_all_flats(self, n):
        orbits = orbit_decomposition(n)
        assert len(orbits) == 2 * (n + 1)
        assert sum(orbit_size(d) for d in orbits) == 3**n + 2**n

    def test_descriptor_fields(self):
        orbits = orbit_decomposition(3)
        type_one = [d for d in orbits if d.kind is FlatKind.TYPE_I]
        type_two = [d for d in orbits if d.kind is FlatKind.TYPE_II]
        assert [d.rank for d in type_one] == [0, 1, 2, 3]
        assert [d.rank for d in type_two] == [1, 2, 3, 4]
        assert type_one[2].induction_weight == h_sum_alphabets(2)
        assert type_two[1].induction_weight == h_x(1) * h_x(2)
        assert str(type_one[1].contraction) == "Thagomizer(2)"
        assert str(type_two[3].contraction) == "Boolean(0)"

    def test_stabilizer_orders(self):
        type_one, type_two = orbit_decomposition(2)[1], orbit_decomposition(2)[4]
        assert stabilizer_order(type_one) == 1 * 2 * 1
        assert stabilizer_order(type_two) == 2 * 1 * 2 * 1
        assert orbit_size(type_one) == hyperoctahedral_order(2) // 2 == 4
        assert orbit_size(type_two) == 2

    def test_representatives(self):
        orbits = orbit_decomposition(2)
        assert orbits[2].representative == spike_a(1) | spike_a(2)
        assert orbits[4].representative == SPINE | spike(1)


class TestGroupAction:
    def test_identity_fixes_everything(self):
        identity = SignedPermutation.identity(3)
        for flat in flats_of_thagomizer(3):
            assert identity.apply(flat) == flat

    def test_flip_swaps_a_and_b(self):
        flip = SignedPermutation((1, 2), frozenset({2}))
        assert flip.apply(spike_a(2)) == spike_b(2)
        assert flip.apply(SPINE | spike(2)) == SPINE | spike(2)

    def test_bad_elements(self):
        with pytest.raises(InvalidInputError):
            SignedPermutation((1, 1))
        with pytest.raises(InvalidInputError):
            SignedPermutation((1, 2), frozenset({3}))

    @pytest.mark.parametrize("n", range(4))
    def test_every_flat_reaches_its_representative(self, n):
        orbits = {(d.kind, d.k): d.representative for d in orbit_decomposition(n)}
        for flat in flats_of_thagomizer(n):
            element = carry_to_representative(n, flat)
            assert element.apply(flat) == orbits[classify_flat(n, flat)]

    def test_action_preserves_flats(self):
        lattice = flats_of_thagomizer(3)
        element = SignedPermutation((3, 1, 2), frozenset({1, 3}))
        assert {element.apply(flat) for flat in lattice} == set(lattice.flats)

    def test_classify_rejects_non_flats(self):
        with pytest.raises(InvalidInputError):
            classify_flat(2, spike(1))
        with pytest.raises(InvalidInputError):
            classify_flat(2, SPINE | spike_a(1))
        with pytest.raises(InvalidInputError):
            classify_flat(1, spike_a(2))


class TestGraphModels:
    def test_thagomizer_graph_shape(self):
        graph = thagomizer_graph(3)
        assert graph.number_of_nodes() == 5
        assert graph.number_of_edges() == 7

    @pytest.mark.parametrize("n", range(4))
    def test_graphic_closure_matches(self, n):
        assert graphic_flats(thagomizer_graph(n)).ranks == flats_of_thagomizer(n).ranks

    @pytest.mark.parametrize("k", [2, 3, 4, 5])
    def test_cycle_closure_matches(self, k):
        assert graphic_flats(cycle_graph(k)).ranks == flats_of_cycle(k).ranks

    def test_two_cycle_is_parallel_pair(self):
        assert cycle_graph(2).number_of_edges() == 2
        with pytest.raises(InvalidInputError):
            cycle_graph(1)

    @pytest.mark.parametrize("n", range(4))
    def test_chromatic_polynomial(self, n):
        assert chromatic_check(n)
