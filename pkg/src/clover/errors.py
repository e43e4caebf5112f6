"""Exception types shared across the package.

Every error carries a short machine-readable ``code`` so the CLI can report it
in JSON and map it to an exit status.
"""


class CloverError(Exception):
    code = "ERROR"
    exit_status = 1

    def __init__(self, message="", code=None):
        super().__init__(message)
        if code is not None:
            self.code = code

    def to_json(self):
        return {"error": self.code, "message": str(self)}


class ValidationError(CloverError, ValueError):
    """Input data violates a structural invariant."""

    code = "INVALID"


class LimitError(CloverError):
    code = "LIMIT"
    exit_status = 2


class ArityError(ValidationError):
    code = "ARITY"


class DegreeMismatchError(ValidationError):
    code = "DEGREE_MISMATCH"


class DivisibilityError(CloverError, ArithmeticError):
    """An exact division that must succeed did not; signals a bug."""

    code = "DIVISIBILITY"
    exit_status = 3
