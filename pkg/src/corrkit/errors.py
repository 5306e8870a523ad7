"""Exception hierarchy shared by every corrkit module."""


class CorrkitError(Exception):
    """Base class for all corrkit errors."""


class EmptyInput(CorrkitError):
    """An operation received an empty vector."""


class ShortSample(CorrkitError):
    """Fewer data points than the operation requires."""


class ParseError(CorrkitError):
    """A cell or record could not be parsed.

    Rows are 1-based data rows (header excluded); row 0 refers to the
    header itself.
    """

    def __init__(self, row: int, column: str, detail: str = ""):
        self.row = row
        self.column = column
        msg = f"row {row}, column {column!r}"
        super().__init__(f"{msg}: {detail}" if detail else msg)


class NonFiniteValue(CorrkitError):
    """NaN or infinity encountered; inputs must be clean."""

    def __init__(self, row: int | None = None, detail: str = ""):
        self.row = row
        parts = [p for p in (f"row {row}" if row is not None else "", detail) if p]
        super().__init__(": ".join(parts) or "non-finite value")


class DegenerateVariance(CorrkitError):
    """A variance term in a coefficient denominator is zero."""


class UndefinedDirection(CorrkitError):
    """Directional prediction requested from a zero coefficient."""


class TooFewPoints(CorrkitError):
    """Sample smaller than the requested bin count."""


class InvalidParams(CorrkitError):
    """Malformed configuration, flags, or generator parameters."""


class AllTied(CorrkitError):
    """Every y value equals the sample median: Y is constant for the
    purposes of the quadrant split and the pair is uncorrelated."""


class ConstantY(AllTied):
    """Multidimensional variant of AllTied (no usable median classes)."""


class ConstantX(CorrkitError):
    """X carries no variation, so no vertical cut can separate anything."""


class SingularScatter(CorrkitError):
    """Pooled within-class scatter matrix could not be inverted even
    after regularization."""
