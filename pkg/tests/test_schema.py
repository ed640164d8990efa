"""
Tests for the bundled JSON schemas.

These tests ensure that:
- Every schema under thagkl/schemas is itself a valid draft-07 schema
- Documents produced by the library validate against their schema
- Malformed documents are rejected
"""

import json

import jsonschema
import pytest

from thagkl.closed_forms import p_thagomizer
from thagkl.errors import ReportValidationError
from thagkl.positivity import verify_strong_ilc
from thagkl.render import SCHEMA_DIR, emit_graded_json, load_schema, validate_document

SCHEMA_NAMES = ["graded_bischur", "dimension_poly", "ilc_report", "verify_report"]


def test_every_schema_file_is_listed():
    assert sorted(path.name.split(".")[0] for path in SCHEMA_DIR.glob("*.schema.json")) == sorted(SCHEMA_NAMES)


@pytest.mark.parametrize("name", SCHEMA_NAMES)
def test_schema_is_valid_draft7(name):
    schema = load_schema(name)
    jsonschema.Draft7Validator.check_schema(schema)
    assert schema["$schema"].startswith("http://json-schema.org/draft-07")


def test_missing_schema():
    with pytest.raises(FileNotFoundError):
        load_schema("jokes")


def test_emitted_polynomial_validates():
    validate_document(emit_graded_json(p_thagomizer(6)), "graded_bischur")


def test_ilc_report_validates():
    validate_document(verify_strong_ilc(4, "p", strong=True).to_dict(), "ilc_report")


def test_dimension_document_requires_coefficients():
    with pytest.raises(ReportValidationError):
        validate_document({"family": "p-thag", "n": 2}, "dimension_poly")


def test_verify_report_rejects_unknown_status():
    report = {
        "suites": [{"name": "kl-thagomizer", "passed": True, "checked": 1, "failures": []}],
        "summary": {"overall_status": "MAYBE", "passed": 1, "failed": 0},
    }
    with pytest.raises(ReportValidationError):
        validate_document(report, "verify_report")


def test_graded_document_rejects_extra_keys():
    document = json.loads(json.dumps(emit_graded_json(p_thagomizer(2))))
    document[0]["extra"] = True
    with pytest.raises(ReportValidationError):
        validate_document(document, "graded_bischur")
