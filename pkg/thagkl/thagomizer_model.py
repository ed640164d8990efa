"""
Explicit combinatorial models of the thagomizer matroid T_n and the cycle
matroid C_k: their lattices of flats, the B_n-orbits of flats of T_n with
stabilizers and induction weights, and graph models used as cross-checks.

Ground-set layout for T_n: the spine e_* is bit 0, spike i (1-based) has
a_i at bit 2i-1 and b_i at bit 2i.
"""

import enum
import itertools
import logging
from dataclasses import dataclass
from math import factorial
from typing import Dict, List, NamedTuple, Set, Tuple

import networkx as nx
import sympy

from .bi_ring import BiSchurPoly, h_sum_alphabets, h_x
from .errors import InvalidInputError
from .lattice_oracle import T, FlatLattice, characteristic_polynomial

logger = logging.getLogger(__name__)

THAGOMIZER_GUARD = 8
CYCLE_GUARD = 10
BOOLEAN_GUARD = 12

SPINE = 1


def spike_a(i: int) -> int:
    return 1 << (2 * i - 1)


def spike_b(i: int) -> int:
    return 1 << (2 * i)


def spike(i: int) -> int:
    return spike_a(i) | spike_b(i)


def _mask(bits) -> int:
    mask = 0
    for bit in bits:
        mask |= bit
    return mask


# Lattices of flats


def flats_of_thagomizer(n: int) -> FlatLattice:
    """
    All flats of T_n: a_i for i in I and b_j for j in J with I, J disjoint
    (rank |I|+|J|), and the spine together with whole spikes S (rank |S|+1).
    """
    if not 0 <= n <= THAGOMIZER_GUARD:
        raise InvalidInputError(f"thagomizer lattices are built for 0 <= n <= {THAGOMIZER_GUARD}, got {n}")
    ranks: Dict[int, int] = {}
    # each spike is empty, a_i only, or b_i only
    for choice in itertools.product((0, 1, 2), repeat=n):
        mask = _mask(
            spike_a(i) if c == 1 else spike_b(i) for i, c in enumerate(choice, start=1) if c
        )
        ranks[mask] = sum(1 for c in choice if c)
    for size in range(n + 1):
        for chosen in itertools.combinations(range(1, n + 1), size):
            ranks[SPINE | _mask(spike(i) for i in chosen)] = size + 1
    lattice = FlatLattice(ranks, 2 * n + 1)
    logger.debug("T_%d has %d flats", n, len(lattice))
    return lattice


def flats_of_cycle(n: int) -> FlatLattice:
    """Subsets of size at most n-2 of the n edges of a cycle, plus the full set"""
    if not 2 <= n <= CYCLE_GUARD:
        raise InvalidInputError(f"cycle lattices are built for 2 <= n <= {CYCLE_GUARD}, got {n}")
    ranks = {}
    for size in range(n - 1):
        for chosen in itertools.combinations(range(n), size):
            ranks[_mask(1 << i for i in chosen)] = size
    ranks[(1 << n) - 1] = n - 1
    return FlatLattice(ranks, n)


def flats_of_boolean(r: int) -> FlatLattice:
    """The Boolean lattice of rank r"""
    if not 0 <= r <= BOOLEAN_GUARD:
        raise InvalidInputError(f"Boolean lattices are built for 0 <= r <= {BOOLEAN_GUARD}, got {r}")
    return FlatLattice({mask: bin(mask).count("1") for mask in range(1 << r)}, r)


# Orbits of flats under B_n


class FlatKind(enum.Enum):
    TYPE_I = "I"
    TYPE_II = "II"


class Contraction(NamedTuple):
    family: str
    size: int

    def __str__(self) -> str:
        return f"{self.family}({self.size})"


@dataclass(frozen=True)
class FlatOrbitDescriptor:
    """One B_n-orbit of flats of T_n, described through its representative"""

    kind: FlatKind
    n: int
    k: int
    rank: int
    contraction: Contraction
    induction_weight: BiSchurPoly

    @property
    def representative(self) -> int:
        if self.kind is FlatKind.TYPE_I:
            return _mask(spike_a(i) for i in range(1, self.k + 1))
        return SPINE | _mask(spike(i) for i in range(1, self.k + 1))


def stabilizer_order(descriptor: FlatOrbitDescriptor) -> int:
    """k! 2^(n-k) (n-k)! for Type I, 2^k k! 2^(n-k) (n-k)! for Type II"""
    n, k = descriptor.n, descriptor.k
    rest = 2 ** (n - k) * factorial(n - k)
    if descriptor.kind is FlatKind.TYPE_I:
        return factorial(k) * rest
    return 2**k * factorial(k) * rest


def hyperoctahedral_order(n: int) -> int:
    return 2**n * factorial(n)


def orbit_size(descriptor: FlatOrbitDescriptor) -> int:
    return hyperoctahedral_order(descriptor.n) // stabilizer_order(descriptor)


def orbit_decomposition(n: int) -> List[FlatOrbitDescriptor]:
    """
    The 2(n+1) orbit descriptors of flats of T_n.

    Type I (no spine, k spikes touched): stabilizer S_k x B_(n-k), contraction
    T_(n-k) up to parallel copies of the spine, weight h_k[X+Y].
    Type II (spine and k whole spikes): stabilizer B_k x B_(n-k), Boolean
    contraction of rank n-k, weight h_k[X] h_(n-k)[X].
    """
    if n < 0:
        raise InvalidInputError(f"n must be nonnegative, got {n}")
    descriptors = [
        FlatOrbitDescriptor(FlatKind.TYPE_I, n, k, k, Contraction("Thagomizer", n - k), h_sum_alphabets(k))
        for k in range(n + 1)
    ]
    descriptors += [
        FlatOrbitDescriptor(FlatKind.TYPE_II, n, k, k + 1, Contraction("Boolean", n - k), h_x(k) * h_x(n - k))
        for k in range(n + 1)
    ]
    return descriptors


@dataclass(frozen=True)
class SignedPermutation:
    """
    An element of B_n acting on the ground set of T_n.

    images[i-1] is the spike that spike i is sent to; i in flips means a_i
    and b_i trade places on the way. The spine is fixed.
    """

    images: Tuple[int, ...]
    flips: frozenset = frozenset()

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise InvalidInputError(f"images must be a permutation of 1..{n}, got {self.images}")
        if not set(self.flips) <= set(range(1, n + 1)):
            raise InvalidInputError(f"flips must name spikes 1..{n}, got {sorted(self.flips)}")

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(1, n + 1)))

    def apply(self, mask: int) -> int:
        result = mask & SPINE
        for i, target in enumerate(self.images, start=1):
            has_a, has_b = bool(mask & spike_a(i)), bool(mask & spike_b(i))
            if i in self.flips:
                has_a, has_b = has_b, has_a
            if has_a:
                result |= spike_a(target)
            if has_b:
                result |= spike_b(target)
        return result


def classify_flat(n: int, mask: int) -> Tuple[FlatKind, int]:
    """Kind and spike count of a flat of T_n given as a bitmask"""
    if mask >> (2 * n + 1):
        raise InvalidInputError(f"mask {mask:#b} has bits outside the ground set of T_{n}")
    touched = [i for i in range(1, n + 1) if mask & spike(i)]
    if mask & SPINE:
        if any(mask & spike(i) != spike(i) for i in touched):
            raise InvalidInputError(f"mask {mask:#b} is not a flat: a spine flat must take whole spikes")
        return FlatKind.TYPE_II, len(touched)
    if any(mask & spike(i) == spike(i) for i in touched):
        raise InvalidInputError(f"mask {mask:#b} is not a flat: a whole spike forces the spine")
    return FlatKind.TYPE_I, len(touched)


def carry_to_representative(n: int, mask: int) -> SignedPermutation:
    """A group element sending the flat mask to its orbit representative"""
    kind, k = classify_flat(n, mask)
    touched = [i for i in range(1, n + 1) if mask & spike(i)]
    untouched = [i for i in range(1, n + 1) if not mask & spike(i)]
    images = [0] * n
    for target, source in enumerate(touched + untouched, start=1):
        images[source - 1] = target
    flips = frozenset()
    if kind is FlatKind.TYPE_I:
        flips = frozenset(i for i in touched if mask & spike_b(i))
    return SignedPermutation(tuple(images), flips)


# Graph models


def thagomizer_graph(n: int) -> nx.MultiGraph:
    """K_{1,1,n} with each edge labelled by its ground-set bit index"""
    graph = nx.MultiGraph()
    graph.add_edge("A", "B", index=0)
    for i in range(1, n + 1):
        graph.add_edge("A", i, index=2 * i - 1)
        graph.add_edge("B", i, index=2 * i)
    return graph


def cycle_graph(k: int) -> nx.MultiGraph:
    """The k-cycle as a multigraph (k = 2 gives a pair of parallel edges)"""
    if k < 2:
        raise InvalidInputError(f"a cycle needs at least 2 edges, got {k}")
    graph = nx.MultiGraph()
    for i in range(k):
        graph.add_edge(i, (i + 1) % k, index=i)
    return graph


def graphic_flats(graph: nx.MultiGraph) -> FlatLattice:
    """
    Flats of the graphic matroid by brute force: an edge set is closed when
    every other edge joins two different components of it.
    """
    edges = [(u, v, data["index"]) for u, v, data in graph.edges(data=True)]
    ranks: Dict[int, int] = {}
    for size in range(len(edges) + 1):
        for chosen in itertools.combinations(edges, size):
            components = nx.utils.UnionFind(graph.nodes)
            for u, v, _ in chosen:
                components.union(u, v)
            chosen_indices: Set[int] = {index for _, _, index in chosen}
            if any(index not in chosen_indices and components[u] == components[v] for u, v, index in edges):
                continue
            roots = {components[node] for node in graph.nodes}
            ranks[_mask(1 << index for index in chosen_indices)] = graph.number_of_nodes() - len(roots)
    return FlatLattice(ranks, len(edges))


def chromatic_check(n: int) -> bool:
    """Whether the chromatic polynomial of K_{1,1,n} equals t times the characteristic polynomial of T_n"""
    chromatic = nx.chromatic_polynomial(nx.Graph(thagomizer_graph(n)))
    chromatic = chromatic.subs({symbol: T for symbol in chromatic.free_symbols})
    expected = sympy.Poly(T, T, domain="ZZ") * characteristic_polynomial(flats_of_thagomizer(n))
    return sympy.Poly(chromatic, T, domain="ZZ") == expected


def expected_flat_count(n: int) -> int:
    """3^n Type I flats plus 2^n Type II flats"""
    return 3**n + 2**n
