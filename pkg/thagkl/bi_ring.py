"""
The two-alphabet ring in the basis s_lambda[X] s_mu[Y], and polynomials in t
over it.

BiSchurPoly is the image of the wreath-product Frobenius characteristic:
the basis element for Bipartition(lambda, mu) stands for V_{lambda,mu}.
GradedBiSchur is a polynomial in t whose coefficients are BiSchurPoly; it
holds the equivariant KL, inverse KL, Z and characteristic polynomials.
"""

from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

import sympy

from .errors import InvalidInputError, MixedDegreeError
from .partitions import EMPTY, EMPTY_BIPARTITION, Bipartition, Partition, bipartition_dimension
from .schur_ring import LinearCombination, SchurPoly, e_gen, h_gen, schur_product_terms

T = sympy.Symbol("t")


class BiSchurPoly(LinearCombination[Bipartition]):
    """Integer combination of s_lambda[X] s_mu[Y]"""

    __slots__ = ()

    @classmethod
    def _coerce_key(cls, key) -> Bipartition:
        if isinstance(key, Bipartition):
            return key
        first, second = key
        return Bipartition(Partition(first), Partition(second))

    @classmethod
    def _unit_key(cls) -> Bipartition:
        return EMPTY_BIPARTITION

    @classmethod
    def _multiply_keys(cls, left: Bipartition, right: Bipartition) -> Dict[Bipartition, int]:
        xs = schur_product_terms(left.first, right.first)
        ys = schur_product_terms(left.second, right.second)
        return {Bipartition(gx, gy): cx * cy for gx, cx in xs.items() for gy, cy in ys.items()}

    @classmethod
    def _key_degree(cls, key: Bipartition) -> int:
        return key.size

    @classmethod
    def in_x(cls, poly: SchurPoly) -> "BiSchurPoly":
        """Place a single-alphabet polynomial in the X alphabet"""
        return cls({Bipartition(lam, EMPTY): c for lam, c in poly.terms()})

    @classmethod
    def in_y(cls, poly: SchurPoly) -> "BiSchurPoly":
        """Place a single-alphabet polynomial in the Y alphabet"""
        return cls({Bipartition(EMPTY, mu): c for mu, c in poly.terms()})

    def bidegrees(self) -> set:
        return {key.bidegree for key in self._terms}


def bischur(first: Iterable[int] = (), second: Iterable[int] = (), coeff: int = 1) -> BiSchurPoly:
    """The basis element s_first[X] s_second[Y], optionally scaled"""
    return BiSchurPoly.basis(Bipartition(Partition(first), Partition(second)), coeff)


def bi_multiply(a: BiSchurPoly, b: BiSchurPoly) -> BiSchurPoly:
    return a * b


def embed(poly: SchurPoly, alphabet: str) -> BiSchurPoly:
    """Place poly in alphabet "X" or "Y" """
    if alphabet == "X":
        return BiSchurPoly.in_x(poly)
    if alphabet == "Y":
        return BiSchurPoly.in_y(poly)
    raise InvalidInputError(f"alphabet must be 'X' or 'Y', got {alphabet!r}")


Coefficient = Union["GradedBiSchur", BiSchurPoly, int]


class GradedBiSchur:
    """
    Polynomial in t with BiSchurPoly coefficients.

    Degrees are nonnegative and zero coefficients are never stored, so two
    values are equal exactly when their stored maps agree.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Optional[Mapping[int, BiSchurPoly]] = None):
        cleaned: Dict[int, BiSchurPoly] = {}
        for degree, coeff in (coeffs or {}).items():
            degree = int(degree)
            if degree < 0:
                raise InvalidInputError(f"t-degrees must be nonnegative, got {degree}")
            if isinstance(coeff, int):
                coeff = BiSchurPoly.one().scale(coeff)
            if degree in cleaned:
                coeff = cleaned[degree] + coeff
            cleaned[degree] = coeff
        self._coeffs = {d: c for d, c in cleaned.items() if c}

    @classmethod
    def zero(cls) -> "GradedBiSchur":
        return cls()

    @classmethod
    def constant(cls, coeff: Union[BiSchurPoly, int] = 1) -> "GradedBiSchur":
        return cls({0: coeff})

    @classmethod
    def monomial(cls, degree: int, coeff: Union[BiSchurPoly, int] = 1) -> "GradedBiSchur":
        return cls({degree: coeff})

    @classmethod
    def t_minus_one(cls) -> "GradedBiSchur":
        return cls({1: 1, 0: -1})

    def coefficient(self, degree: int) -> BiSchurPoly:
        return self._coeffs.get(degree, BiSchurPoly.zero())

    @property
    def degree(self) -> int:
        """Highest t-degree; -1 for the zero polynomial"""
        return max(self._coeffs, default=-1)

    def degrees(self) -> List[int]:
        return sorted(self._coeffs)

    def items(self) -> Iterator[Tuple[int, BiSchurPoly]]:
        for degree in sorted(self._coeffs):
            yield degree, self._coeffs[degree]

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def shift(self, k: int) -> "GradedBiSchur":
        """Multiply by t^k"""
        return GradedBiSchur({d + k: c for d, c in self._coeffs.items()})

    def map_coefficients(self, func) -> "GradedBiSchur":
        return GradedBiSchur({d: func(c) for d, c in self._coeffs.items()})

    @staticmethod
    def _lift(value: Coefficient) -> "GradedBiSchur":
        if isinstance(value, GradedBiSchur):
            return value
        if isinstance(value, (BiSchurPoly, int)):
            return GradedBiSchur.constant(value)
        return NotImplemented

    def __add__(self, other: Coefficient) -> "GradedBiSchur":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        merged = dict(self._coeffs)
        for degree, coeff in other._coeffs.items():
            merged[degree] = merged[degree] + coeff if degree in merged else coeff
        return GradedBiSchur(merged)

    __radd__ = __add__

    def __neg__(self) -> "GradedBiSchur":
        return GradedBiSchur({d: -c for d, c in self._coeffs.items()})

    def __sub__(self, other: Coefficient) -> "GradedBiSchur":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Coefficient) -> "GradedBiSchur":
        return (-self) + other

    def __mul__(self, other: Coefficient) -> "GradedBiSchur":
        if isinstance(other, int):
            return GradedBiSchur({d: c.scale(other) for d, c in self._coeffs.items()})
        if isinstance(other, BiSchurPoly):
            return GradedBiSchur({d: c * other for d, c in self._coeffs.items()})
        if not isinstance(other, GradedBiSchur):
            return NotImplemented
        product: Dict[int, BiSchurPoly] = {}
        for d1, c1 in self._coeffs.items():
            for d2, c2 in other._coeffs.items():
                term = c1 * c2
                product[d1 + d2] = product[d1 + d2] + term if d1 + d2 in product else term
        return GradedBiSchur(product)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, (BiSchurPoly, int)):
            other = GradedBiSchur.constant(other)
        if not isinstance(other, GradedBiSchur):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self) -> str:
        inner = ", ".join(f"{d}: {c!r}" for d, c in self.items())
        return f"GradedBiSchur({{{inner}}})"


def graded_sum(parts: Iterable[GradedBiSchur]) -> GradedBiSchur:
    total = GradedBiSchur.zero()
    for part in parts:
        total = total + part
    return total


# Alphabet-level plethysm


def h_x(n: int) -> BiSchurPoly:
    return BiSchurPoly.in_x(h_gen(n))


def h_y(n: int) -> BiSchurPoly:
    return BiSchurPoly.in_y(h_gen(n))


def e_x(n: int) -> BiSchurPoly:
    return BiSchurPoly.in_x(e_gen(n))


def e_y(n: int) -> BiSchurPoly:
    return BiSchurPoly.in_y(e_gen(n))


def h_sum_alphabets(n: int) -> BiSchurPoly:
    """h_n[X+Y] = sum over a+b=n of h_a[X] h_b[Y]"""
    if n < 0:
        raise InvalidInputError(f"h_n[X+Y] needs n >= 0, got {n}")
    return BiSchurPoly({Bipartition((a,), (n - a,)): 1 for a in range(n + 1)})


def e_sum_alphabets(n: int) -> BiSchurPoly:
    """e_n[X+Y] = sum over a+b=n of e_a[X] e_b[Y]"""
    if n < 0:
        raise InvalidInputError(f"e_n[X+Y] needs n >= 0, got {n}")
    return BiSchurPoly({Bipartition((1,) * a, (1,) * (n - a)): 1 for a in range(n + 1)})


def e_doubled(n: int) -> BiSchurPoly:
    """e_n[2X+Y] = sum over a+b+c=n of e_a[X] e_b[X] e_c[Y]"""
    if n < 0:
        raise InvalidInputError(f"e_n[2X+Y] needs n >= 0, got {n}")
    total = BiSchurPoly.zero()
    for c in range(n + 1):
        for a in range(n - c + 1):
            total = total + e_x(a) * e_x(n - c - a) * e_y(c)
    return total


def h_scaled_x(m: int) -> GradedBiSchur:
    """h_m[(t-1)X] = sum over b of (-1)^(m-b) t^b h_b[X] e_(m-b)[X]"""
    if m < 0:
        raise InvalidInputError(f"h_m[(t-1)X] needs m >= 0, got {m}")
    return GradedBiSchur({b: (h_x(b) * e_x(m - b)).scale((-1) ** (m - b)) for b in range(m + 1)})


def h_twisted(n: int) -> GradedBiSchur:
    """h_n[(t-1)X - Y] = sum over j of (-1)^(n-j) h_j[(t-1)X] e_(n-j)[Y]"""
    if n < 0:
        raise InvalidInputError(f"h_n[(t-1)X-Y] needs n >= 0, got {n}")
    return graded_sum(h_scaled_x(j) * e_y(n - j).scale((-1) ** (n - j)) for j in range(n + 1))


# Restriction from B_n to S_n


def merge_alphabets(poly: BiSchurPoly) -> BiSchurPoly:
    """Restrict to S_n: s_lambda[X] s_mu[Y] goes to s_lambda s_mu, placed in X"""
    merged: Dict[Bipartition, int] = {}
    for key, c in poly.terms():
        for nu, d in schur_product_terms(key.first, key.second).items():
            target = Bipartition(nu, EMPTY)
            merged[target] = merged.get(target, 0) + c * d
    return BiSchurPoly(merged)


def restrict_to_symmetric(g: GradedBiSchur) -> GradedBiSchur:
    return g.map_coefficients(merge_alphabets)


# Specializations and tests on graded values


def dimension_poly(g: GradedBiSchur) -> sympy.Poly:
    """Replace every s_lambda[X] s_mu[Y] by the dimension of V_{lambda,mu}"""
    coefficients = {}
    for degree, coeff in g.items():
        sizes = coeff.degrees()
        if len(sizes) > 1:
            raise MixedDegreeError(f"t^{degree} coefficient mixes total degrees {sorted(sizes)}")
        coefficients[(degree,)] = sum(c * bipartition_dimension(key) for key, c in coeff.terms())
    return sympy.Poly.from_dict(coefficients or {(0,): 0}, T, domain="ZZ")


def is_palindromic(g: GradedBiSchur, r: int) -> bool:
    """Whether g has degree at most r and coefficient i equals coefficient r-i"""
    if r < 0:
        raise InvalidInputError(f"palindromic degree must be nonnegative, got {r}")
    if g.degree > r:
        return False
    return all(g.coefficient(i) == g.coefficient(r - i) for i in range(r + 1))


def integer_poly(coefficients: Mapping[int, int]) -> sympy.Poly:
    """An integer polynomial in t from {degree: coefficient}"""
    rep = {(d,): c for d, c in coefficients.items() if c}
    return sympy.Poly.from_dict(rep or {(0,): 0}, T, domain="ZZ")
