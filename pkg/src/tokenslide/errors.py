"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed input data or a violated call precondition."""


class SizeMismatchError(InputError):
    """Two token multisets that must have equal cardinality do not."""


class FeasibilityError(ValueError):
    """A configuration fails its feasibility predicate (dominating / hitting)."""


class MatchingError(ValueError):
    """A matching violates its structural contract."""


class ParseError(InputError):
    """Instance or move file rejected; carries the offending 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class InvariantError(RuntimeError):
    """Internal contradiction; signals a bug rather than bad input."""


class StateCapExceeded(RuntimeError):
    """Exhaustive search aborted after visiting more states than allowed."""
