"""
Independent equivariant oracles.

P of T_n and of the k-cycle come from the orbit sum over flats plus the
palindromicity of Z; Q of T_n from the triangular inversion against P;
the characteristic polynomial of T_n from the flat-orbit recursion. None of
them reads a closed formula. Results are memoized per process; call
clear_caches() to start over.
"""

import logging
from functools import lru_cache
from typing import Tuple

from .bi_ring import GradedBiSchur, dimension_poly, e_sum_alphabets, h_sum_alphabets, h_x, h_y, is_palindromic
from .errors import InternalInconsistencyError, InvalidInputError
from .lattice_oracle import inverse_kl
from .thagomizer_model import FlatKind, flats_of_thagomizer, orbit_decomposition

logger = logging.getLogger(__name__)

MAX_THAGOMIZER_N = 10
MIN_CYCLE_K = 2
MAX_CYCLE_K = 14


def _check_range(value: int, low: int, high: int, name: str):
    if not low <= value <= high:
        raise InvalidInputError(f"{name} must be between {low} and {high}, got {value}")


def _extract_kl(rest: GradedBiSchur, r: int, label: str) -> Tuple[GradedBiSchur, GradedBiSchur]:
    """
    Split off P from the known part of Z: P_i = rest_(r-i) - rest_i for
    2i < r, then check that P + rest is palindromic of degree r.
    """
    p = GradedBiSchur(
        {i: rest.coefficient(r - i) - rest.coefficient(i) for i in range((r + 1) // 2)}
    )
    z = p + rest
    if not is_palindromic(z, r):
        raise InternalInconsistencyError(f"Z of {label} is not palindromic of degree {r}")
    if 2 * p.degree >= r:
        raise InternalInconsistencyError(f"P of {label} has degree {p.degree}, rank is {r}")
    return p, z


@lru_cache(maxsize=None)
def _thagomizer_kl(n: int) -> Tuple[GradedBiSchur, GradedBiSchur]:
    rest = GradedBiSchur.zero()
    for orbit in orbit_decomposition(n):
        if orbit.kind is FlatKind.TYPE_I:
            if orbit.k == 0:
                continue
            # the stabilizer acts on the contraction through B_(n-k) alone
            contraction, _ = _thagomizer_kl(n - orbit.k)
            rest = rest + (contraction * orbit.induction_weight).shift(orbit.rank)
        else:
            # Boolean contraction: P is trivial
            rest = rest + GradedBiSchur.monomial(orbit.rank, orbit.induction_weight)
    p, z = _extract_kl(rest, n + 1, f"T_{n}")
    logger.debug("orbit recursion solved T_%d: deg P = %d", n, p.degree)
    return p, z


def p_thagomizer_oracle(n: int) -> GradedBiSchur:
    """B_n-equivariant KL polynomial of T_n from the orbit recursion"""
    _check_range(n, 0, MAX_THAGOMIZER_N, "n")
    return _thagomizer_kl(n)[0]


def z_thagomizer_oracle(n: int) -> GradedBiSchur:
    """B_n-equivariant Z-polynomial of T_n produced by the same recursion"""
    _check_range(n, 0, MAX_THAGOMIZER_N, "n")
    return _thagomizer_kl(n)[1]


@lru_cache(maxsize=None)
def _cycle_kl(k: int) -> Tuple[GradedBiSchur, GradedBiSchur]:
    # j-subsets form one S_k-orbit of rank-j flats with contraction C_(k-j)
    rest = GradedBiSchur.monomial(k - 1, h_y(k))
    for j in range(1, k - 1):
        contraction, _ = _cycle_kl(k - j)
        rest = rest + (contraction * h_y(j)).shift(j)
    return _extract_kl(rest, k - 1, f"C_{k}")


def p_cycle_oracle(k: int) -> GradedBiSchur:
    """S_k-equivariant KL polynomial of the k-cycle, in the Y alphabet"""
    _check_range(k, MIN_CYCLE_K, MAX_CYCLE_K, "k")
    return _cycle_kl(k)[0]


def z_cycle_oracle(k: int) -> GradedBiSchur:
    _check_range(k, MIN_CYCLE_K, MAX_CYCLE_K, "k")
    return _cycle_kl(k)[1]


@lru_cache(maxsize=1)
def _check_inverse_sign_convention():
    """The solved Q_1 must have the dimension of the brute-force Q of T_1"""
    solved = dimension_poly(_thagomizer_inverse(1))
    expected = inverse_kl(flats_of_thagomizer(1))
    if solved != expected:
        raise InternalInconsistencyError(
            f"sign convention check failed: solved Q_1 has dimension {solved.as_expr()}, "
            f"the lattice gives {expected.as_expr()}"
        )


@lru_cache(maxsize=None)
def _thagomizer_inverse(n: int) -> GradedBiSchur:
    """
    Solve sum_k (-1)^k Q_k h_(n-k)[X] = sum_k (-1)^k e_k[X+Y] P_(n-k) for Q_n.
    The k = n term on the left is (-1)^n Q_n.
    """
    rhs = GradedBiSchur.zero()
    for k in range(n + 1):
        rhs = rhs + _thagomizer_kl(n - k)[0] * e_sum_alphabets(k).scale((-1) ** k)
    known = GradedBiSchur.zero()
    for k in range(n):
        known = known + _thagomizer_inverse(k) * h_x(n - k).scale((-1) ** k)
    return (rhs - known) * ((-1) ** n)


def q_thagomizer_oracle(n: int) -> GradedBiSchur:
    """B_n-equivariant inverse KL polynomial of T_n by triangular inversion"""
    _check_range(n, 0, MAX_THAGOMIZER_N, "n")
    if n >= 1:
        _check_inverse_sign_convention()
    return _thagomizer_inverse(n)


@lru_cache(maxsize=None)
def _characteristic(n: int) -> GradedBiSchur:
    # sum over k of h_k[X+Y] chi_(n-k) = (t-1) t^n h_n[X]
    chi = (GradedBiSchur.t_minus_one() * h_x(n)).shift(n)
    for k in range(1, n + 1):
        chi = chi - _characteristic(n - k) * h_sum_alphabets(k)
    return chi


def char_poly_oracle(n: int) -> GradedBiSchur:
    """B_n-equivariant characteristic polynomial of T_n from the flat-orbit recursion"""
    _check_range(n, 0, MAX_THAGOMIZER_N, "n")
    return _characteristic(n)


def clear_caches():
    for cached in (_thagomizer_kl, _cycle_kl, _thagomizer_inverse, _characteristic, _check_inverse_sign_convention):
        cached.cache_clear()
