"""
Text, JSON and LaTeX renderings of graded two-alphabet polynomials and of
integer dimension polynomials.

Every JSON document is checked against its schema under thagkl/schemas
before it leaves the process, and again when it is parsed back.
"""

import json
from functools import lru_cache
from itertools import groupby
from pathlib import Path
from typing import Any, Dict, Iterable, List

import jsonschema
import sympy

from .bi_ring import BiSchurPoly, GradedBiSchur
from .errors import InvalidInputError, ReportValidationError
from .partitions import Bipartition, Partition

SCHEMA_DIR = Path(__file__).parent / "schemas"

FORMATS = ("text", "json", "latex")


@lru_cache(maxsize=None)
def load_schema(name: str) -> Dict:
    """Load thagkl/schemas/<name>.schema.json"""
    path = SCHEMA_DIR / f"{name}.schema.json"
    if not path.exists():
        raise FileNotFoundError(f"Schema file not found: {path}")
    with open(path, "r") as f:
        return json.load(f)


def validate_document(document: Any, schema_name: str):
    """Raise ReportValidationError unless document matches the named schema"""
    try:
        jsonschema.validate(document, load_schema(schema_name))
    except jsonschema.ValidationError as e:
        raise ReportValidationError(schema_name, e.message) from e


def dumps(document: Any) -> str:
    return json.dumps(document, indent=2)


# Text


def _text_shape(key: Bipartition) -> str:
    return "s[{};{}]".format(",".join(map(str, key.first)), ",".join(map(str, key.second)))


def _t_prefix(degree: int) -> str:
    if degree == 0:
        return ""
    if degree == 1:
        return "t*"
    return f"t^{degree}*"


def render_text(g: GradedBiSchur) -> str:
    """s[2;] + t*s[;2] style; zero renders as 0"""
    pieces: List[str] = []
    for degree, coeff in g.items():
        for key, c in coeff.terms():
            magnitude = f"{abs(c)}*" if abs(c) != 1 else ""
            body = f"{magnitude}{_t_prefix(degree)}{_text_shape(key)}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(pieces) or "0"


# LaTeX


def latex_partition(shape: Partition) -> str:
    """(2^{2},1) with exponents for repeated parts; the empty shape is \\varnothing"""
    if not shape:
        return r"\varnothing"
    runs = []
    for part, group in groupby(shape):
        count = len(list(group))
        runs.append(f"{part}^{{{count}}}" if count > 1 else str(part))
    return "(" + ",".join(runs) + ")"


def render_latex(g: GradedBiSchur) -> str:
    pieces: List[str] = []
    for degree, coeff in g.items():
        for key, c in coeff.terms():
            magnitude = f"{abs(c)}\\," if abs(c) != 1 else ""
            power = "" if degree == 0 else (r"\,t" if degree == 1 else rf"\,t^{{{degree}}}")
            body = f"{magnitude}V_{{{latex_partition(key.first)},{latex_partition(key.second)}}}{power}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(pieces) or "0"


# JSON


def _terms_document(coeff: BiSchurPoly) -> List[Dict]:
    return [{"lambda": list(key.first), "mu": list(key.second), "coeff": c} for key, c in coeff.terms()]


def emit_graded_json(g: GradedBiSchur) -> List[Dict]:
    document = [{"t": degree, "terms": _terms_document(coeff)} for degree, coeff in g.items()]
    validate_document(document, "graded_bischur")
    return document


def parse_graded_json(document: Iterable[Dict]) -> GradedBiSchur:
    """Inverse of emit_graded_json; repeated cells are summed"""
    document = list(document)
    validate_document(document, "graded_bischur")
    coeffs: Dict[int, BiSchurPoly] = {}
    for entry in document:
        poly = BiSchurPoly((Bipartition(term["lambda"], term["mu"]), term["coeff"]) for term in entry["terms"])
        coeffs[entry["t"]] = coeffs[entry["t"]] + poly if entry["t"] in coeffs else poly
    return GradedBiSchur(coeffs)


def render_graded(g: GradedBiSchur, fmt: str) -> str:
    """Render in one of FORMATS"""
    if fmt == "text":
        return render_text(g)
    if fmt == "latex":
        return render_latex(g)
    if fmt == "json":
        return dumps(emit_graded_json(g))
    raise InvalidInputError(f"format must be one of {', '.join(FORMATS)}, got {fmt!r}")


# Integer polynomials


def integer_coefficients(poly: sympy.Poly) -> List[int]:
    """Coefficients from t^0 upward; the zero polynomial gives []"""
    if poly.is_zero:
        return []
    return [int(c) for c in reversed(poly.all_coeffs())]


def dimension_document(family: str, n: int, poly: sympy.Poly, source: str = "formula") -> Dict:
    document = {"family": family, "n": n, "source": source, "coefficients": integer_coefficients(poly)}
    validate_document(document, "dimension_poly")
    return document


def render_integer_poly(poly: sympy.Poly, fmt: str, family: str, n: int, source: str = "formula") -> str:
    if fmt == "text":
        return str(poly.as_expr())
    if fmt == "latex":
        return sympy.latex(poly.as_expr())
    if fmt == "json":
        return dumps(dimension_document(family, n, poly, source))
    raise InvalidInputError(f"format must be one of {', '.join(FORMATS)}, got {fmt!r}")
