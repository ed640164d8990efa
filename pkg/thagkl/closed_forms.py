"""
Closed formulas for the equivariant invariants of thagomizer and cycle
matroids.

Every function builds its polynomial coefficient by coefficient in the
two-alphabet ring; no generating series are involved. The cycle polynomial
C_k is stated in one alphabet, chosen by the caller: Y for the thagomizer
formulas, X for the type-A comparison.
"""

from .bi_ring import (
    BiSchurPoly,
    GradedBiSchur,
    bischur,
    e_doubled,
    e_sum_alphabets,
    embed,
    graded_sum,
    h_scaled_x,
    h_sum_alphabets,
    h_twisted,
    h_x,
    h_y,
)
from .errors import InvalidInputError
from .partitions import rectangle
from .schur_ring import SchurPoly, e_gen, schur


def _require_nonnegative(n: int, name: str = "n"):
    if n < 0:
        raise InvalidInputError(f"{name} must be nonnegative, got {n}")


def p_thagomizer(n: int) -> GradedBiSchur:
    """
    Equivariant KL polynomial of T_n:
    V_{(n),0} + sum over k >= 1, 2k <= i <= n of V_{(n-i),(i-2k+2,2^(k-1))} t^k
    """
    _require_nonnegative(n)
    coeffs = {0: bischur((n,), ())}
    for k in range(1, n // 2 + 1):
        coeffs[k] = BiSchurPoly(
            {((n - i,), (i - 2 * k + 2,) + rectangle(k - 1, 2)): 1 for i in range(2 * k, n + 1)}
        )
    return GradedBiSchur(coeffs)


def q_thagomizer(n: int) -> GradedBiSchur:
    """
    Equivariant inverse KL polynomial of T_n:
    sum over k, 2k <= i <= n of V_{(1^(n-i)),(2^k,1^(i-2k))} t^k
    """
    _require_nonnegative(n)
    coeffs = {}
    for k in range(n // 2 + 1):
        coeffs[k] = BiSchurPoly(
            {((1,) * (n - i), rectangle(k, 2) + (1,) * (i - 2 * k)): 1 for i in range(2 * k, n + 1)}
        )
    return GradedBiSchur(coeffs)


def c_cycle(k: int, alphabet: str = "Y") -> GradedBiSchur:
    """S_k-equivariant KL polynomial of the k-cycle: sum over i of s_(k-2i,2^i) t^i"""
    _require_nonnegative(k, "k")
    if alphabet not in ("X", "Y"):
        raise InvalidInputError(f"alphabet must be 'X' or 'Y', got {alphabet!r}")
    if k <= 1:
        return GradedBiSchur.zero()
    return GradedBiSchur(
        {i: embed(schur(k - 2 * i, *rectangle(i, 2)), alphabet) for i in range((k - 2) // 2 + 1)}
    )


def z_cycle(n: int) -> GradedBiSchur:
    """Z-polynomial of the n-cycle: t^(n-1) h_n + sum over k <= n-2 of t^k h_k C_(n-k)"""
    if n < 2:
        raise InvalidInputError(f"the cycle Z-polynomial needs n >= 2, got {n}")
    total = GradedBiSchur.monomial(n - 1, h_y(n))
    for k in range(n - 1):
        total = total + (c_cycle(n - k) * h_y(k)).shift(k)
    return total


def z_thagomizer(n: int) -> GradedBiSchur:
    """Z-polynomial of T_n as a sum over the two orbit families of flats"""
    _require_nonnegative(n)
    type_one = graded_sum((p_thagomizer(n - k) * h_sum_alphabets(k)).shift(k) for k in range(n + 1))
    type_two = graded_sum(GradedBiSchur.monomial(k + 1, h_x(k) * h_x(n - k)) for k in range(n + 1))
    return type_one + type_two


def q_from_p(n: int) -> GradedBiSchur:
    """Q_n = sum over i of (-1)^i e_(n-i)[2X+Y] P_i"""
    _require_nonnegative(n)
    return graded_sum(p_thagomizer(i) * e_doubled(n - i).scale((-1) ** i) for i in range(n + 1))


def pieri_alternating_lhs(m: int, k: int) -> SchurPoly:
    """sum over j <= m of (-1)^j e_(m-j) s_(j+2,2^(k-1)); equals s_(2^k,1^m)"""
    _require_nonnegative(m, "m")
    if k < 1:
        raise InvalidInputError(f"k must be at least 1, got {k}")
    total = SchurPoly.zero()
    for j in range(m + 1):
        total = total + (e_gen(m - j) * schur(j + 2, *rectangle(k - 1, 2))).scale((-1) ** j)
    return total


def char_poly_thagomizer(n: int) -> GradedBiSchur:
    """(t-1) h_n[(t-1)X - Y]; coefficients are virtual"""
    _require_nonnegative(n)
    return GradedBiSchur.t_minus_one() * h_twisted(n)


def char_poly_boolean(m: int) -> GradedBiSchur:
    """h_m[(t-1)X], the B_m-equivariant characteristic polynomial of the rank-m Boolean matroid"""
    _require_nonnegative(m, "m")
    return h_scaled_x(m)


def characteristic_recursion_residual(n: int) -> GradedBiSchur:
    """
    t h_n[tX] - h_n[tX] - sum over k of h_k[X+Y] chi_(n-k), using the closed
    characteristic polynomials; zero when the flat-orbit recursion holds.
    """
    _require_nonnegative(n)
    scaled = GradedBiSchur.monomial(n, h_x(n))
    total = scaled.shift(1) - scaled
    for k in range(n + 1):
        total = total - char_poly_thagomizer(n - k) * h_sum_alphabets(k)
    return total


def _kl_with_cycle_input(n: int, head: BiSchurPoly, factor, alphabet: str, sign: bool) -> GradedBiSchur:
    total = GradedBiSchur.constant(head)
    for k in range(2, n + 1):
        weight = factor(n - k)
        if sign and k % 2:
            weight = -weight
        total = total + (c_cycle(k, alphabet) * weight).shift(1)
    return total


def p_type_a(n: int) -> GradedBiSchur:
    """S_n-equivariant form h_n[X] + t sum over k >= 2 of h_(n-k)[X] C_k(X;t)"""
    _require_nonnegative(n)
    return _kl_with_cycle_input(n, h_x(n), h_x, "X", sign=False)


def r_thagomizer(n: int) -> GradedBiSchur:
    """h_n[X] + t sum over k >= 2 of h_(n-k)[X] C_k(Y;t); equals p_thagomizer(n)"""
    _require_nonnegative(n)
    return _kl_with_cycle_input(n, h_x(n), h_x, "Y", sign=False)


def q_signed(n: int) -> GradedBiSchur:
    """e_n[X+Y] + t sum over k >= 2 of (-1)^k e_(n-k)[X+Y] C_k(Y;t); equals q_thagomizer(n)"""
    _require_nonnegative(n)
    return _kl_with_cycle_input(n, e_sum_alphabets(n), e_sum_alphabets, "Y", sign=True)

