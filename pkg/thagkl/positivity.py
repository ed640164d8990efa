"""
Schur positivity, multiplicity-freeness, and the induced log-concavity sweep.

Products in the two-alphabet ring stand for induction from B_n x B_n to
B_2n, so P_(n,i) P_(n,j) - P_(n,i-1) P_(n,j+1) is an honest representation
exactly when it is Schur positive.
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple, Union

from .bi_ring import BiSchurPoly, GradedBiSchur
from .closed_forms import char_poly_thagomizer, p_thagomizer, q_thagomizer
from .errors import InternalInconsistencyError, InvalidInputError
from .partitions import Bipartition
from .recursion_oracle import MAX_THAGOMIZER_N, char_poly_oracle, p_thagomizer_oracle, q_thagomizer_oracle

logger = logging.getLogger(__name__)

VARIANTS = ("p", "q", "chi")

_SOURCES: Dict[Tuple[str, str], Callable[[int], GradedBiSchur]] = {
    ("p", "closed"): p_thagomizer,
    ("q", "closed"): q_thagomizer,
    ("p", "oracle"): p_thagomizer_oracle,
    ("q", "oracle"): q_thagomizer_oracle,
    ("chi", "closed"): char_poly_thagomizer,
    ("chi", "oracle"): char_poly_oracle,
}


@dataclass(frozen=True)
class Witness:
    """The first offending term in canonical order"""

    t_degree: int
    bipartition: Bipartition
    coefficient: int

    def to_dict(self) -> Dict:
        return {
            "t": self.t_degree,
            "lambda": list(self.bipartition.first),
            "mu": list(self.bipartition.second),
            "coeff": self.coefficient,
        }


Checkable = Union[GradedBiSchur, BiSchurPoly]


def _as_graded(g: Checkable) -> GradedBiSchur:
    if isinstance(g, BiSchurPoly):
        return GradedBiSchur.constant(g)
    return g


def _first_violation(g: Checkable, allowed: Callable[[int], bool]) -> Optional[Witness]:
    for degree, coeff in _as_graded(g).items():
        for key, c in coeff.terms():
            if not allowed(c):
                return Witness(degree, key, c)
    return None


def is_schur_positive(g: Checkable) -> Tuple[bool, Optional[Witness]]:
    """Whether every stored coefficient is positive; the zero polynomial passes"""
    witness = _first_violation(g, lambda c: c >= 1)
    return witness is None, witness


def is_multiplicity_free(g: Checkable) -> Tuple[bool, Optional[Witness]]:
    """Whether every coefficient is 0 or 1"""
    witness = _first_violation(g, lambda c: c == 1)
    return witness is None, witness


def _normalize_variant(variant: str) -> str:
    lowered = variant.lower()
    if lowered not in VARIANTS:
        raise InvalidInputError(f"variant must be one of {list(VARIANTS)}, got {variant!r}")
    return lowered


def _top_index(n: int, variant: str) -> int:
    # P and Q stop below half the rank n+1; chi runs up to the rank
    return n if variant == "chi" else n // 2


def _coefficients(n: int, variant: str, source: str) -> Callable[[int], BiSchurPoly]:
    poly = _SOURCES[(variant, source)](n)
    if variant != "chi":
        return poly.coefficient
    return lambda k: poly.coefficient(k).scale((-1) ** (n + 1 - k))


def ilc_difference(n: int, i: int, j: int, variant: str = "p", source: str = "closed") -> BiSchurPoly:
    """
    P_(n,i) P_(n,j) - P_(n,i-1) P_(n,j+1), or the same with Q coefficients.
    Coefficients past floor(n/2) are zero.

    The chi variant uses the characteristic polynomial coefficients twisted
    by (-1)^(n+1-k), so the leading h_n[X] keeps its sign.
    """
    variant = _normalize_variant(variant)
    if n < 0:
        raise InvalidInputError(f"n must be nonnegative, got {n}")
    if i < 1 or i > j:
        raise InvalidInputError(f"need 1 <= i <= j, got i={i}, j={j}")
    if source not in ("closed", "oracle"):
        raise InvalidInputError(f"source must be 'closed' or 'oracle', got {source!r}")
    c = _coefficients(n, variant, source)
    return c(i) * c(j) - c(i - 1) * c(j + 1)


@dataclass
class IlcEntry:
    n: int
    i: int
    j: int
    variant: str
    positive: bool
    witness: Optional[Witness] = None
    confirmed: Optional[bool] = None

    def to_dict(self) -> Dict:
        entry = {"n": self.n, "i": self.i, "j": self.j, "variant": self.variant, "positive": self.positive}
        if self.witness is not None:
            entry["witness"] = self.witness.to_dict()
        if self.confirmed is not None:
            entry["confirmed"] = self.confirmed
        return entry


@dataclass
class IlcReport:
    max_n: int
    variant: str
    strong: bool
    entries: List[IlcEntry] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def failures(self) -> List[IlcEntry]:
        return [entry for entry in self.entries if not entry.positive]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict:
        return {
            "max_n": self.max_n,
            "variant": self.variant,
            "strong": self.strong,
            "checked": len(self.entries),
            "failures": len(self.failures),
            "entries": [entry.to_dict() for entry in self.entries],
        }


def _index_pairs(top: int, strong: bool):
    for i in range(1, top + 1):
        for j in range(i, top + 1 if strong else i + 1):
            yield i, j


def verify_strong_ilc(max_n: int, variant: str = "p", strong: bool = True) -> IlcReport:
    """
    Sweep n <= max_n and 1 <= i <= j <= floor(n/2) (up to n for chi) and check
    Schur positivity of each difference. strong=False keeps only i = j.

    A failure is re-derived from the recursion oracle before it is reported:
    if the oracle agrees the entry is marked confirmed, otherwise the two
    computations disagree and InternalInconsistencyError is raised.
    """
    variant = _normalize_variant(variant)
    if not 0 <= max_n <= MAX_THAGOMIZER_N:
        raise InvalidInputError(f"max_n must be between 0 and {MAX_THAGOMIZER_N}, got {max_n}")
    started = time.perf_counter()
    report = IlcReport(max_n=max_n, variant=variant, strong=strong)
    for n in range(max_n + 1):
        for i, j in _index_pairs(_top_index(n, variant), strong):
            difference = ilc_difference(n, i, j, variant)
            positive, witness = is_schur_positive(difference)
            entry = IlcEntry(n, i, j, variant, positive, witness)
            if not positive:
                rederived = ilc_difference(n, i, j, variant, source="oracle")
                if rederived != difference:
                    raise InternalInconsistencyError(
                        f"closed form and oracle disagree on the {variant.upper()} difference at n={n}, i={i}, j={j}"
                    )
                entry.confirmed = True
                logger.warning("log-concavity counterexample at n=%d, i=%d, j=%d (%s)", n, i, j, variant)
            report.entries.append(entry)
    report.entries.sort(key=lambda entry: (entry.n, entry.i, entry.j))
    report.elapsed = time.perf_counter() - started
    logger.debug("ilc sweep %s to n=%d: %d cases in %.2fs", variant, max_n, len(report.entries), report.elapsed)
    return report
