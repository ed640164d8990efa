"""
Verification suites.

Each suite compares two independent computations of the same invariant
over a range of sizes and records every mismatch with a structured diff.
run_all() collects the suites into one report validated against
verify_report.schema.json.
"""

import logging
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Tuple

import sympy

from . import closed_forms as cf
from . import recursion_oracle as oracle
from .bi_ring import T, GradedBiSchur, dimension_poly, h_x, is_palindromic, restrict_to_symmetric
from .errors import ThagklError
from .lattice_oracle import characteristic_polynomial, inverse_kl, kl_and_z
from .positivity import is_multiplicity_free, verify_strong_ilc
from .render import emit_graded_json, validate_document
from .schur_ring import schur
from .series import verify_series_identities
from .thagomizer_model import (
    carry_to_representative,
    chromatic_check,
    classify_flat,
    cycle_graph,
    expected_flat_count,
    flats_of_boolean,
    flats_of_cycle,
    flats_of_thagomizer,
    graphic_flats,
    orbit_decomposition,
    orbit_size,
    thagomizer_graph,
)

logger = logging.getLogger(__name__)

# Sizes at which the brute-force checks stay interactive.
LATTICE_LIMIT = 5
GRAPH_LIMIT = 3
CHROMATIC_LIMIT = 4
MOBIUS_LIMIT = 3
ILC_LIMIT = 6
PALINDROME_LIMIT = 8
PIERI_M_LIMIT = 8
PIERI_K_LIMIT = 5
TYPE_A_LIMIT = 6
CHAR_ORACLE_LIMIT = 6


@dataclass
class SuiteResult:
    name: str
    passed: bool = True
    checked: int = 0
    failures: List[Dict] = field(default_factory=list)
    elapsed: float = 0.0

    def record(self, case: str, ok: bool, detail: str = "", diff=None):
        self.checked += 1
        if ok:
            return
        self.passed = False
        failure = {"case": case, "detail": detail or "mismatch"}
        if diff is not None:
            failure["diff"] = diff
        self.failures.append(failure)

    def compare(self, case: str, left: GradedBiSchur, right: GradedBiSchur, what: str):
        """Record equality of two graded values, with their difference as the diff"""
        if left == right:
            self.record(case, True)
        else:
            self.record(case, False, f"{what} differ", emit_graded_json(left - right))

    def compare_integer(self, case: str, left: sympy.Poly, right: sympy.Poly, what: str):
        if left == right:
            self.record(case, True)
        else:
            self.record(case, False, f"{what}: {left.as_expr()} != {right.as_expr()}")

    def to_dict(self) -> Dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "elapsed": round(self.elapsed, 3),
            "failures": self.failures,
        }


SuiteFunction = Callable[[SuiteResult, int, int], None]

SUITES: Dict[str, SuiteFunction] = {}


def suite(name: str):
    """Register a suite under name"""
    def register(func: SuiteFunction) -> SuiteFunction:
        SUITES[name] = func
        return func
    return register


def run_suite(name: str, max_n: int, series_order: int) -> SuiteResult:
    result = SuiteResult(name)
    started = time.perf_counter()
    try:
        SUITES[name](result, max_n, series_order)
    except ThagklError as e:
        result.record("raised", False, f"{type(e).__name__}: {e}")
    result.elapsed = time.perf_counter() - started
    logger.debug("suite %s: %d cases in %.2fs", name, result.checked, result.elapsed)
    return result


def _thagomizer_sizes(max_n: int, limit: int = oracle.MAX_THAGOMIZER_N) -> range:
    return range(min(max_n, limit) + 1)


def _cycle_sizes(max_n: int, limit: int = oracle.MAX_CYCLE_K) -> range:
    return range(oracle.MIN_CYCLE_K, min(max_n + 2, limit) + 1)


@lru_cache(maxsize=None)
def lattice_invariants(n: int) -> Tuple[sympy.Poly, sympy.Poly, sympy.Poly, sympy.Poly]:
    """P, Z, Q and the characteristic polynomial of T_n by brute force"""
    lattice = flats_of_thagomizer(n)
    p, z = kl_and_z(lattice)
    return p, z, inverse_kl(lattice), characteristic_polynomial(lattice)


def _product_form(n: int) -> sympy.Poly:
    return sympy.Poly((T - 1) * (T - 2) ** n, T, domain="ZZ")


@suite("kl-thagomizer")
def kl_thagomizer(result: SuiteResult, max_n: int, series_order: int):
    for n in _thagomizer_sizes(max_n):
        closed = cf.p_thagomizer(n)
        result.compare(f"n={n}", closed, oracle.p_thagomizer_oracle(n), "closed form and orbit recursion")
        result.compare(f"n={n} cycle input", closed, cf.r_thagomizer(n), "closed form and cycle-input form")
        result.compare(f"n={n} Z", cf.z_thagomizer(n), oracle.z_thagomizer_oracle(n), "Z closed form and recursion")


@suite("kl-cycle")
def kl_cycle(result: SuiteResult, max_n: int, series_order: int):
    for k in _cycle_sizes(max_n):
        result.compare(f"k={k}", cf.c_cycle(k), oracle.p_cycle_oracle(k), "closed form and recursion")
        result.compare(f"k={k} Z", cf.z_cycle(k), oracle.z_cycle_oracle(k), "Z closed form and recursion")


@suite("inverse-kl")
def inverse_kl_suite(result: SuiteResult, max_n: int, series_order: int):
    for n in _thagomizer_sizes(max_n):
        closed = cf.q_thagomizer(n)
        result.compare(f"n={n} from P", closed, cf.q_from_p(n), "closed form and Q-from-P")
        result.compare(f"n={n} signed", closed, cf.q_signed(n), "closed form and signed cycle form")
        result.compare(f"n={n} inversion", closed, oracle.q_thagomizer_oracle(n), "closed form and inversion")


@suite("dimension-oracle")
def dimension_oracle(result: SuiteResult, max_n: int, series_order: int):
    for n in _thagomizer_sizes(max_n, LATTICE_LIMIT):
        p, z, q, chi = lattice_invariants(n)
        result.compare_integer(f"n={n} P", dimension_poly(cf.p_thagomizer(n)), p, "P dimensions")
        result.compare_integer(f"n={n} Z", dimension_poly(cf.z_thagomizer(n)), z, "Z dimensions")
        result.compare_integer(f"n={n} Q", dimension_poly(cf.q_thagomizer(n)), q, "Q dimensions")
        result.compare_integer(f"n={n} chi", dimension_poly(cf.char_poly_thagomizer(n)), chi, "chi dimensions")

        lattice = flats_of_thagomizer(n)
        result.record(f"n={n} flat count", len(lattice) == expected_flat_count(n), f"{len(lattice)} flats")
        orbits = orbit_decomposition(n)
        result.record(
            f"n={n} orbit sizes",
            sum(orbit_size(d) for d in orbits) == len(lattice),
            "orbit sizes do not add up to the number of flats",
        )
        representatives = {(d.kind, d.k): d.representative for d in orbits}
        stray = [
            flat for flat in lattice
            if carry_to_representative(n, flat).apply(flat) != representatives[classify_flat(n, flat)]
        ]
        result.record(f"n={n} orbit membership", not stray, f"{len(stray)} flats miss their representative")

    for k in _cycle_sizes(max_n, LATTICE_LIMIT + 2):
        p, z = kl_and_z(flats_of_cycle(k))
        result.compare_integer(f"k={k} cycle P", dimension_poly(cf.c_cycle(k)), p, "cycle P dimensions")
        result.compare_integer(f"k={k} cycle Z", dimension_poly(cf.z_cycle(k)), z, "cycle Z dimensions")

    for m in _thagomizer_sizes(max_n, LATTICE_LIMIT):
        result.compare_integer(
            f"m={m} Boolean chi",
            dimension_poly(cf.char_poly_boolean(m)),
            characteristic_polynomial(flats_of_boolean(m)),
            "Boolean chi dimensions",
        )


@suite("graph-models")
def graph_models(result: SuiteResult, max_n: int, series_order: int):
    for n in _thagomizer_sizes(max_n, GRAPH_LIMIT):
        graphic = graphic_flats(thagomizer_graph(n))
        result.record(f"n={n} closure", graphic.ranks == flats_of_thagomizer(n).ranks, "graphic flats differ")
    for k in _cycle_sizes(max_n, GRAPH_LIMIT + 2):
        graphic = graphic_flats(cycle_graph(k))
        result.record(f"k={k} cycle closure", graphic.ranks == flats_of_cycle(k).ranks, "graphic flats differ")
    for n in _thagomizer_sizes(max_n, CHROMATIC_LIMIT):
        result.record(f"n={n} chromatic", chromatic_check(n), "chromatic polynomial is not t * chi")


@suite("multiplicity-free")
def multiplicity_free(result: SuiteResult, max_n: int, series_order: int):
    for n in _thagomizer_sizes(max_n):
        for label, poly in (("P", cf.p_thagomizer(n)), ("Q", cf.q_thagomizer(n))):
            ok, witness = is_multiplicity_free(poly)
            detail = "" if ok else f"coefficient {witness.coefficient} at t^{witness.t_degree} {witness.bipartition!r}"
            result.record(f"n={n} {label}", ok, detail, None if ok else witness.to_dict())


@suite("palindromicity")
def palindromicity(result: SuiteResult, max_n: int, series_order: int):
    for n in _thagomizer_sizes(max_n, PALINDROME_LIMIT):
        result.record(f"n={n}", is_palindromic(cf.z_thagomizer(n), n + 1), f"Z(T_{n}) is not palindromic")
    for k in _cycle_sizes(max_n, 12):
        result.record(f"k={k}", is_palindromic(cf.z_cycle(k), k - 1), f"Z(C_{k}) is not palindromic")


@suite("pieri-alternating")
def pieri_alternating(result: SuiteResult, max_n: int, series_order: int):
    for m in _thagomizer_sizes(max_n, PIERI_M_LIMIT):
        for k in range(1, PIERI_K_LIMIT + 1):
            lhs = cf.pieri_alternating_lhs(m, k)
            expected = schur(*((2,) * k + (1,) * m))
            result.record(f"m={m} k={k}", lhs == expected, f"got {lhs!r}")


@suite("series-identities")
def series_identities(result: SuiteResult, max_n: int, series_order: int):
    for check in verify_series_identities(series_order):
        diff = None if check.passed else check.to_dict()
        result.record(f"{check.name} to u^{series_order}", check.passed, check.description, diff)


@suite("characteristic")
def characteristic(result: SuiteResult, max_n: int, series_order: int):
    for n in _thagomizer_sizes(max_n, PALINDROME_LIMIT):
        closed = cf.char_poly_thagomizer(n)
        result.compare_integer(f"n={n} product", dimension_poly(closed), _product_form(n), "(t-1)(t-2)^n")
        residual = cf.characteristic_recursion_residual(n)
        result.record(f"n={n} recursion", residual.is_zero(), "flat-orbit recursion has a residual")
        if n <= CHAR_ORACLE_LIMIT:
            result.compare(f"n={n} oracle", closed, oracle.char_poly_oracle(n), "closed form and recursion")
        boolean_sum = sum(
            (cf.char_poly_boolean(n - k) * h_x(k) for k in range(n + 1)), GradedBiSchur.zero()
        )
        result.compare(f"n={n} Boolean", boolean_sum, GradedBiSchur.monomial(n, h_x(n)), "Boolean Cauchy sum")
    for n in _thagomizer_sizes(max_n, MOBIUS_LIMIT):
        chi = characteristic_polynomial(flats_of_thagomizer(n))
        result.compare_integer(f"n={n} Moebius", chi, _product_form(n), "Moebius and product form")


@suite("ilc-sweep")
def ilc_sweep(result: SuiteResult, max_n: int, series_order: int):
    top = min(max_n, ILC_LIMIT)
    for variant in ("p", "q"):
        report = verify_strong_ilc(top, variant, strong=True)
        for entry in report.entries:
            result.record(
                f"{variant} n={entry.n} i={entry.i} j={entry.j}",
                entry.positive,
                "confirmed counterexample",
                None if entry.positive else entry.to_dict(),
            )


@suite("type-a")
def type_a(result: SuiteResult, max_n: int, series_order: int):
    for n in _thagomizer_sizes(max_n, TYPE_A_LIMIT):
        result.compare(f"n={n} restriction", cf.p_type_a(n), restrict_to_symmetric(cf.p_thagomizer(n)), "S_n form and restriction")
        result.compare_integer(
            f"n={n}", dimension_poly(cf.p_type_a(n)), dimension_poly(cf.p_thagomizer(n)), "type-A dimensions"
        )


@suite("linear-coefficient")
def linear_coefficient(result: SuiteResult, max_n: int, series_order: int):
    for n in range(2, min(max_n, PALINDROME_LIMIT) + 1):
        expected = 2**n - n - 1
        got = int(dimension_poly(cf.p_thagomizer(n)).nth(1))
        result.record(f"n={n}", got == expected, f"t coefficient {got}, expected {expected}")
        if n <= LATTICE_LIMIT:
            brute = int(lattice_invariants(n)[0].nth(1))
            result.record(f"n={n} lattice", brute == expected, f"lattice t coefficient {brute}")


def run_all(max_n: int, series_order: int, only: Optional[List[str]] = None) -> Dict:
    """Run every registered suite (or the named ones) and build the report"""
    names = only or list(SUITES)
    results = [run_suite(name, max_n, series_order) for name in names]
    failed = sum(1 for r in results if not r.passed)
    report = {
        "suites": [r.to_dict() for r in results],
        "summary": {
            "overall_status": "PASS" if failed == 0 else "FAIL",
            "passed": len(results) - failed,
            "failed": failed,
            "max_n": max_n,
            "series_order": series_order,
        },
    }
    validate_document(report, "verify_report")
    return report
