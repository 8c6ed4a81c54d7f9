"""Exception types shared across the package."""


class CapacityError(Exception):
    """A requested allocation or operator exceeds the configured limits."""


class NotUnitaryError(ValueError):
    """Matrix failed the unitarity check; carries the max deviation."""

    def __init__(self, deviation: float):
        super().__init__(f"matrix is not unitary: max |U†U - I| = {deviation:.3e}")
        self.deviation = deviation


class DegenerateStateError(Exception):
    """Every outcome probability is numerically zero; nothing to sample."""


class ParseError(ValueError):
    """Circuit text is malformed; carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class ValidationError(ValueError):
    """Well-formed circuit text with out-of-contract contents."""


class DimensionError(ValueError):
    """Operator and state dimensions do not match."""


class InsufficientDataError(ValueError):
    """Sample sets too small or degenerate for the statistical test."""
