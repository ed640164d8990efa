"""
Integer partitions, bipartitions and the dimension combinatorics built on them.

A Partition is a tuple of positive, weakly decreasing parts. Trailing zeros
are stripped on construction so that every shape has exactly one key.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterable, Iterator, List, Tuple

from sympy.utilities.iterables import partitions as _sympy_partitions

from .errors import CoefficientOverflowError, InvalidInputError, InvalidPartitionError

INT64_MAX = 2**63 - 1

# Dimension formulas refuse anything larger; desk-scale work stays at n <= 10.
DIMENSION_GUARD = 20


def check_int64(value: int, what: str = "coefficient") -> int:
    """Return value unchanged, or raise if it does not fit a signed 64-bit int"""
    if not -INT64_MAX - 1 <= value <= INT64_MAX:
        raise CoefficientOverflowError(f"{what} {value} does not fit in 64 bits")
    return value


class Partition(tuple):
    """A weakly decreasing tuple of positive integers; () is the empty partition"""

    def __new__(cls, parts: Iterable[int] = ()):
        if isinstance(parts, Partition):
            return parts
        values = [int(p) for p in parts]
        while values and values[-1] == 0:
            values.pop()
        for index, part in enumerate(values):
            if part <= 0:
                raise InvalidPartitionError(f"parts must be positive, got {tuple(values)}")
            if index and part > values[index - 1]:
                raise InvalidPartitionError(f"parts must be weakly decreasing, got {tuple(values)}")
        return super().__new__(cls, values)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, index: int) -> int:
        """The index-th part, zero past the end"""
        return self[index] if index < len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def contains(self, other: "Partition") -> bool:
        """Whether the diagram of other fits inside this one"""
        return len(other) <= len(self) and all(o <= s for o, s in zip(other, self))

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


EMPTY = Partition()


def conjugate(lam: Iterable[int]) -> Partition:
    """Transpose the Young diagram of lam"""
    lam = Partition(lam)
    if not lam:
        return EMPTY
    return Partition(sum(1 for part in lam if part > column) for column in range(lam[0]))


def rectangle(rows: int, width: int) -> Tuple[int, ...]:
    """Parts (width,)*rows, handy for shapes such as (2^k)"""
    return (width,) * rows


def hook_dimension(lam: Iterable[int]) -> int:
    """Number of standard Young tableaux of shape lam, by the hook length formula"""
    lam = Partition(lam)
    n = lam.size
    if n > DIMENSION_GUARD:
        raise InvalidInputError(f"dimension formulas are limited to size {DIMENSION_GUARD}, got {n}")
    columns = conjugate(lam)
    hooks = prod(
        (lam[row] - column) + (columns[column] - row) - 1
        for row in range(len(lam))
        for column in range(lam[row])
    )
    return check_int64(factorial(n) // hooks, "dimension")


@lru_cache(maxsize=None)
def count_standard_tableaux(lam: Partition) -> int:
    """Count standard tableaux by removing the largest entry from each corner in turn"""
    lam = Partition(lam)
    if not lam:
        return 1
    total = 0
    for row, part in enumerate(lam):
        if lam.part(row + 1) < part:
            shrunk = list(lam)
            shrunk[row] -= 1
            total += count_standard_tableaux(Partition(shrunk))
    return total


@dataclass(frozen=True, order=True)
class Bipartition:
    """A pair (lambda, mu) indexing the irreducible V_{lambda,mu} of B_n"""

    first: Partition = EMPTY
    second: Partition = EMPTY

    def __post_init__(self):
        object.__setattr__(self, "first", Partition(self.first))
        object.__setattr__(self, "second", Partition(self.second))

    @property
    def size(self) -> int:
        return self.first.size + self.second.size

    @property
    def bidegree(self) -> Tuple[int, int]:
        return self.first.size, self.second.size

    def __repr__(self) -> str:
        return f"Bipartition({list(self.first)}, {list(self.second)})"


EMPTY_BIPARTITION = Bipartition()


def bipartition_dimension(b: Bipartition) -> int:
    """binom(n, |lambda|) * f^lambda * f^mu for a bipartition of n"""
    n = b.size
    if n > DIMENSION_GUARD:
        raise InvalidInputError(f"dimension formulas are limited to size {DIMENSION_GUARD}, got {n}")
    value = comb(n, b.first.size) * hook_dimension(b.first) * hook_dimension(b.second)
    return check_int64(value, "dimension")


def partitions_of(n: int) -> List[Partition]:
    """All partitions of n in descending lexicographic order"""
    if n < 0:
        raise InvalidInputError(f"cannot partition a negative number, got {n}")
    if n == 0:
        return [EMPTY]
    shapes = []
    for multiplicities in _sympy_partitions(n):
        parts = []
        for part in sorted(multiplicities, reverse=True):
            parts.extend([part] * multiplicities[part])
        shapes.append(Partition(parts))
    return sorted(shapes, reverse=True)


def bipartitions_of(n: int) -> Iterator[Bipartition]:
    """All bipartitions of n, in descending lexicographic order of (lambda, mu)"""
    shapes = [
        Bipartition(first, second)
        for first_size in range(n + 1)
        for first in partitions_of(first_size)
        for second in partitions_of(n - first_size)
    ]
    return iter(sorted(shapes, reverse=True))
