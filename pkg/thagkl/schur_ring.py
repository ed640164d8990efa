"""
Single-alphabet symmetric functions in the Schur basis.

SchurPoly is a finite integer combination of Schur functions s_lambda.
Products use Littlewood-Richardson coefficients counted by enumerating
LR skew tableaux row by row, with Pieri shortcuts for one-row and
one-column factors. Every coefficient is kept inside the signed 64-bit
range; leaving it raises CoefficientOverflowError.
"""

import logging
from functools import lru_cache
from collections.abc import Mapping
from typing import Dict, Generic, Iterable, Iterator, List, Optional, Tuple, TypeVar, Union

from .errors import InvalidInputError
from .partitions import EMPTY, Partition, check_int64, conjugate, partitions_of

logger = logging.getLogger(__name__)

K = TypeVar("K")


class LinearCombination(Generic[K]):
    """
    Immutable finite map from basis keys to nonzero integers.

    Subclasses fix the key type through _coerce_key and the product through
    _multiply_keys. Iteration and terms() follow the canonical order:
    descending keys.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Union[Mapping, Iterable[Tuple]]] = None):
        combined: Dict[K, int] = {}
        if terms is not None:
            pairs = terms.items() if isinstance(terms, Mapping) else terms
            for key, coeff in pairs:
                key = self._coerce_key(key)
                combined[key] = combined.get(key, 0) + int(coeff)
        self._terms = {key: check_int64(c) for key, c in combined.items() if c}
        self._hash = None

    # Hooks for subclasses

    @classmethod
    def _coerce_key(cls, key) -> K:
        raise NotImplementedError

    @classmethod
    def _unit_key(cls) -> K:
        raise NotImplementedError

    @classmethod
    def _multiply_keys(cls, left: K, right: K) -> Mapping[K, int]:
        raise NotImplementedError

    @classmethod
    def _key_degree(cls, key: K) -> int:
        raise NotImplementedError

    # Construction

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({cls._unit_key(): 1})

    @classmethod
    def basis(cls, key, coeff: int = 1):
        return cls({key: coeff})

    # Mapping-like access

    def coefficient(self, key) -> int:
        return self._terms.get(self._coerce_key(key), 0)

    def terms(self) -> List[Tuple[K, int]]:
        return [(key, self._terms[key]) for key in sorted(self._terms, reverse=True)]

    def keys(self) -> List[K]:
        return sorted(self._terms, reverse=True)

    def __iter__(self) -> Iterator[K]:
        return iter(self.keys())

    def __len__(self) -> int:
        return len(self._terms)

    def __contains__(self, key) -> bool:
        return self._coerce_key(key) in self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> set:
        return {self._key_degree(key) for key in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    # Arithmetic

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, int):
            return type(self)({self._unit_key(): other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        merged = dict(self._terms)
        for key, coeff in other._terms.items():
            merged[key] = merged.get(key, 0) + coeff
        return type(self)(merged)

    __radd__ = __add__

    def __neg__(self):
        return type(self)({key: -c for key, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, factor: int):
        return type(self)({key: c * factor for key, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, type(self)):
            return NotImplemented
        product: Dict[K, int] = {}
        for left, a in self._terms.items():
            for right, b in other._terms.items():
                for key, c in self._multiply_keys(left, right).items():
                    product[key] = product.get(key, 0) + a * b * c
        return type(self)(product)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise InvalidInputError(f"negative powers are not defined, got {exponent}")
        result = self.one()
        for _ in range(exponent):
            result = result * self
        return result

    # Comparison

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == type(self)({self._unit_key(): other})
        if isinstance(other, LinearCombination):
            return type(self) is type(other) and self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        inner = ", ".join(f"{key!r}: {c}" for key, c in self.terms())
        return f"{type(self).__name__}({{{inner}}})"


class SchurPoly(LinearCombination[Partition]):
    """Integer combination of Schur functions in one alphabet"""

    __slots__ = ()

    @classmethod
    def _coerce_key(cls, key) -> Partition:
        return Partition(key)

    @classmethod
    def _unit_key(cls) -> Partition:
        return EMPTY

    @classmethod
    def _multiply_keys(cls, left: Partition, right: Partition) -> Mapping[Partition, int]:
        return schur_product_terms(left, right)

    @classmethod
    def _key_degree(cls, key: Partition) -> int:
        return key.size


def schur(*parts: int) -> SchurPoly:
    """The single Schur function s_(parts)"""
    return SchurPoly.basis(Partition(parts))


def schur_multiply(a: SchurPoly, b: SchurPoly) -> SchurPoly:
    return a * b


# Littlewood-Richardson coefficients


def lr_coefficient(lam: Iterable[int], mu: Iterable[int], nu: Iterable[int]) -> int:
    """c^nu_{lam,mu}: the multiplicity of s_nu in s_lam * s_mu"""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size + mu.size != nu.size or not nu.contains(lam) or not nu.contains(mu):
        return 0
    return _count_lr_tableaux(lam, mu, nu)


@lru_cache(maxsize=None)
def _count_lr_tableaux(lam: Partition, mu: Partition, nu: Partition) -> int:
    """
    Count fillings of the skew shape nu/lam with content mu that are
    semistandard and whose reverse reading word is a lattice word.

    Rows are filled top to bottom. Within a row the filling is weakly
    increasing, so it is described by how many cells carry each label.
    """
    labels = len(mu)
    if labels == 0:
        return 1 if lam == nu else 0

    def fill(row: int, above: Tuple[int, ...], used: Tuple[int, ...]) -> int:
        if row == len(nu):
            return 1 if used == tuple(mu) else 0
        start, stop = lam.part(row), nu[row]
        above_start = lam.part(row - 1) if row else 0
        total = 0
        for entries, counts in _row_fillings(start, stop, above, above_start, used, mu):
            total += fill(row + 1, entries, counts)
        return total

    return fill(0, (), (0,) * labels)


def _row_fillings(start, stop, above, above_start, used, mu):
    """Yield (entries, new_counts) for every admissible filling of one skew row"""
    labels = len(mu)
    width = stop - start

    def place(label: int, column: int, entries: List[int], counts: List[int]):
        if column == stop:
            yield tuple(entries), tuple(counts)
            return
        if label > labels:
            return
        index = label - 1
        room = min(stop - column, mu[index] - counts[index])
        if index:
            # the label's block is read before label-1's cells in this row
            room = min(room, used[index - 1] - counts[index])
        for amount in range(room, -1, -1):
            ok = True
            for offset in range(amount):
                col = column + offset
                position = col - above_start
                if 0 <= position < len(above) and above[position] >= label:
                    ok = False
                    break
            if not ok:
                continue
            counts[index] += amount
            entries.extend([label] * amount)
            yield from place(label + 1, column + amount, entries, counts)
            del entries[len(entries) - amount:]
            counts[index] -= amount

    if width == 0:
        yield (), tuple(used)
        return
    yield from place(1, start, [], list(used))


def horizontal_strips(lam: Partition, r: int) -> Iterator[Partition]:
    """All nu containing lam with nu/lam a horizontal strip of r boxes"""
    lam = Partition(lam)
    rows = len(lam) + 1

    def grow(row: int, remaining: int, parts: List[int]):
        if row == rows:
            if remaining == 0:
                yield Partition(parts)
            return
        limit = remaining if row == 0 else min(remaining, lam.part(row - 1) - lam.part(row))
        for extra in range(limit, -1, -1):
            parts.append(lam.part(row) + extra)
            yield from grow(row + 1, remaining - extra, parts)
            parts.pop()

    yield from grow(0, r, [])


def vertical_strips(lam: Partition, r: int) -> Iterator[Partition]:
    """All nu containing lam with nu/lam a vertical strip of r boxes"""
    for shape in horizontal_strips(conjugate(lam), r):
        yield conjugate(shape)


@lru_cache(maxsize=None)
def schur_product_terms(lam: Partition, mu: Partition) -> Dict[Partition, int]:
    """Expansion of s_lam * s_mu as {nu: c^nu_{lam,mu}}"""
    lam, mu = Partition(lam), Partition(mu)
    if not mu:
        return {lam: 1}
    if not lam:
        return {mu: 1}
    if len(mu) == 1:
        return {nu: 1 for nu in horizontal_strips(lam, mu[0])}
    if len(lam) == 1:
        return {nu: 1 for nu in horizontal_strips(mu, lam[0])}
    if mu[0] == 1:
        return {nu: 1 for nu in vertical_strips(lam, len(mu))}
    if lam[0] == 1:
        return {nu: 1 for nu in vertical_strips(mu, len(lam))}
    terms = {}
    width = lam[0] + mu[0]
    height = len(lam) + len(mu)
    for nu in partitions_of(lam.size + mu.size):
        if nu[0] > width or len(nu) > height or not nu.contains(lam) or not nu.contains(mu):
            continue
        c = _count_lr_tableaux(lam, mu, nu)
        if c:
            terms[nu] = c
    logger.debug("s%s * s%s has %d terms", list(lam), list(mu), len(terms))
    return terms


def h_gen(n: int) -> SchurPoly:
    """Complete homogeneous h_n = s_(n); h_0 = 1"""
    if n < 0:
        raise InvalidInputError(f"h_n needs n >= 0, got {n}")
    return SchurPoly.basis(Partition((n,)))


def e_gen(n: int) -> SchurPoly:
    """Elementary e_n = s_(1^n); e_0 = 1"""
    if n < 0:
        raise InvalidInputError(f"e_n needs n >= 0, got {n}")
    return SchurPoly.basis(Partition((1,) * n))
