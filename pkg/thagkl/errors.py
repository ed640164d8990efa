"""
Exception hierarchy for thagkl.

Every error raised on purpose by the library derives from ThagklError, so
callers (and the CLI) can catch one type. The mixins keep the builtin
meaning: bad input is still a ValueError, overflow an OverflowError.
"""


class ThagklError(Exception):
    """Base class for all thagkl errors"""


class InvalidInputError(ThagklError, ValueError):
    """A parameter is negative, out of its guard range, or otherwise malformed"""


class InvalidPartitionError(InvalidInputError):
    """Parts are not positive integers in weakly decreasing order"""


class MixedDegreeError(ThagklError, ValueError):
    """A coefficient mixes total degrees where a homogeneous one is required"""


class TruncationMismatchError(ThagklError, ValueError):
    """Series of different truncation orders were combined"""


class CoefficientOverflowError(ThagklError, OverflowError):
    """A coefficient left the signed 64-bit range"""


class InternalInconsistencyError(ThagklError, AssertionError):
    """A solver invariant failed; this signals a bug, not bad input"""


class ReportValidationError(ThagklError):
    """An emitted JSON document does not match its schema"""

    def __init__(self, schema_name: str, message: str):
        super().__init__(f"{schema_name}: {message}")
        self.schema_name = schema_name
