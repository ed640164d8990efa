"""
Brute-force, non-equivariant KLS engine over an explicit lattice of flats.

Flats are bitmasks over the ground set, so a <= b is a & ~b == 0. The
lattice keeps its flats sorted by (rank, mask), which is a linear extension
of the order. All recursive quantities (Moebius values, P of intervals,
Q of intervals) are cached on the lattice instance and keyed by the pair
of masks bounding the interval.
"""

import logging
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

import sympy

from .errors import InternalInconsistencyError, InvalidInputError

logger = logging.getLogger(__name__)

T = sympy.Symbol("t")
ZERO = sympy.Poly(0, T, domain="ZZ")
ONE = sympy.Poly(1, T, domain="ZZ")


def monomial(degree: int, coeff: int = 1) -> sympy.Poly:
    return sympy.Poly.from_dict({(degree,): coeff}, T, domain="ZZ")


def members(mask: int) -> frozenset:
    """Ground-set indices present in a bitmask"""
    return frozenset(index for index in range(mask.bit_length()) if mask >> index & 1)


class FlatLattice:
    """A ranked lattice of flats with bottom and top, plus per-instance caches"""

    def __init__(self, ranks: Mapping[int, int], ground_size: Optional[int] = None):
        if not ranks:
            raise InvalidInputError("a lattice of flats needs at least one flat")
        self.ranks: Dict[int, int] = dict(ranks)
        self.flats: Tuple[int, ...] = tuple(sorted(self.ranks, key=lambda f: (self.ranks[f], f)))
        self.bottom = self.flats[0]
        self.top = self.flats[-1]
        if self.ranks[self.bottom] != 0:
            raise InvalidInputError("the bottom flat must have rank 0")
        for flat in self.flats:
            if not self.leq(self.bottom, flat) or not self.leq(flat, self.top):
                raise InvalidInputError(f"flat {flat:#b} lies outside [bottom, top]")
        self.ground_size = ground_size if ground_size is not None else self.top.bit_length()
        self._above: Dict[int, List[int]] = {}
        self._mobius: Dict[Tuple[int, int], int] = {}
        self._kl: Dict[Tuple[int, int], Tuple[sympy.Poly, sympy.Poly]] = {}
        self._inverse: Dict[Tuple[int, int], sympy.Poly] = {}

    @property
    def rank(self) -> int:
        return self.ranks[self.top]

    def rank_of(self, flat: int) -> int:
        return self.ranks[flat]

    def __len__(self) -> int:
        return len(self.flats)

    def __iter__(self) -> Iterator[int]:
        return iter(self.flats)

    def __contains__(self, flat: int) -> bool:
        return flat in self.ranks

    @staticmethod
    def leq(a: int, b: int) -> bool:
        return a & ~b == 0

    def above(self, a: int) -> List[int]:
        """Flats containing a, in (rank, mask) order"""
        if a not in self._above:
            self._above[a] = [f for f in self.flats if a & ~f == 0]
        return self._above[a]

    def interval_flats(self, a: int, b: int) -> List[int]:
        self._require_pair(a, b)
        return [f for f in self.above(a) if f & ~b == 0]

    def interval(self, a: int, b: int) -> "FlatLattice":
        """The interval [a, b] as a fresh lattice with ranks measured from a"""
        base = self.ranks[a]
        return FlatLattice({f: self.ranks[f] - base for f in self.interval_flats(a, b)}, self.ground_size)

    def covers(self) -> Iterator[Tuple[int, int]]:
        """Pairs (a, b) with b covering a"""
        for a in self.flats:
            strictly_above = [f for f in self.above(a) if f != a]
            for b in strictly_above:
                if not any(c != b and c & ~b == 0 for c in strictly_above):
                    yield a, b

    def is_graded(self) -> bool:
        """Whether rank goes up by exactly one along every cover"""
        return all(self.ranks[b] == self.ranks[a] + 1 for a, b in self.covers())

    def _require_pair(self, a: int, b: int):
        if a not in self.ranks or b not in self.ranks:
            raise InvalidInputError("both arguments must be flats of this lattice")
        if not self.leq(a, b):
            raise InvalidInputError(f"flats {a:#b} and {b:#b} are not comparable as a <= b")

    def __repr__(self) -> str:
        return f"FlatLattice(flats={len(self.flats)}, rank={self.rank})"


def mobius(lattice: FlatLattice, a: int, b: int) -> int:
    """mu(a, a) = 1 and mu(a, b) = -sum of mu(a, z) over a <= z < b"""
    lattice._require_pair(a, b)
    key = (a, b)
    cached = lattice._mobius.get(key)
    if cached is not None:
        return cached
    if a == b:
        value = 1
    else:
        value = -sum(mobius(lattice, a, z) for z in lattice.interval_flats(a, b) if z != b)
    lattice._mobius[key] = value
    return value


def characteristic_polynomial(lattice: FlatLattice) -> sympy.Poly:
    """chi(t) = sum over flats F of mu(bottom, F) t^(rank - rank F)"""
    r = lattice.rank
    chi = ZERO
    for flat in lattice.flats:
        chi = chi + monomial(r - lattice.ranks[flat], mobius(lattice, lattice.bottom, flat))
    return chi


def _coefficient(poly: sympy.Poly, degree: int) -> int:
    return int(poly.nth(degree)) if degree >= 0 else 0


def _interval_kl(lattice: FlatLattice, a: int, b: int) -> Tuple[sympy.Poly, sympy.Poly]:
    key = (a, b)
    if key in lattice._kl:
        return lattice._kl[key]
    r = lattice.ranks[b] - lattice.ranks[a]
    if r == 0:
        lattice._kl[key] = (ONE, ONE)
        return ONE, ONE
    base = lattice.ranks[a]
    rest = ZERO
    for c in lattice.interval_flats(a, b):
        if c == a:
            continue
        p_upper, _ = _interval_kl(lattice, c, b)
        rest = rest + p_upper * monomial(lattice.ranks[c] - base)
    p = ZERO
    for i in range((r + 1) // 2):
        p = p + monomial(i, _coefficient(rest, r - i) - _coefficient(rest, i))
    z = p + rest
    if not _is_palindromic(z, r):
        raise InternalInconsistencyError(f"Z of an interval of rank {r} is not palindromic: {z.as_expr()}")
    if not p.is_zero and 2 * p.degree() >= r:
        raise InternalInconsistencyError(f"P of an interval of rank {r} has degree {p.degree()}")
    lattice._kl[key] = (p, z)
    return p, z


def _is_palindromic(poly: sympy.Poly, r: int) -> bool:
    if not poly.is_zero and poly.degree() > r:
        return False
    return all(_coefficient(poly, i) == _coefficient(poly, r - i) for i in range(r + 1))


def kl_and_z(lattice: FlatLattice) -> Tuple[sympy.Poly, sympy.Poly]:
    """The KL polynomial P and the Z-polynomial of the whole lattice"""
    p, z = _interval_kl(lattice, lattice.bottom, lattice.top)
    logger.debug("KL solve on %r cached %d intervals", lattice, len(lattice._kl))
    return p, z


def _interval_inverse(lattice: FlatLattice, a: int, b: int) -> sympy.Poly:
    key = (a, b)
    if key in lattice._inverse:
        return lattice._inverse[key]
    r = lattice.ranks[b] - lattice.ranks[a]
    if r == 0:
        lattice._inverse[key] = ONE
        return ONE
    base = lattice.ranks[a]
    total = ZERO
    for f in lattice.interval_flats(a, b):
        if f == b:
            continue
        sign = -1 if (lattice.ranks[f] - base) % 2 else 1
        p_upper, _ = _interval_kl(lattice, f, b)
        total = total + _interval_inverse(lattice, a, f) * p_upper * sign
    # the F = b term carries (-1)^r Q; the whole alternating sum vanishes
    q = total * (-1 if r % 2 == 0 else 1)
    lattice._inverse[key] = q
    return q


def inverse_kl(lattice: FlatLattice) -> sympy.Poly:
    """Q of the whole lattice from the alternating sum of Q(lower) P(upper) = 0"""
    return _interval_inverse(lattice, lattice.bottom, lattice.top)


def from_subsets(subsets: Iterable[Tuple[int, int]], ground_size: Optional[int] = None) -> FlatLattice:
    """Build a lattice from (mask, rank) pairs"""
    return FlatLattice(dict(subsets), ground_size)
