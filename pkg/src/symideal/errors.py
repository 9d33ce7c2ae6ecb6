"""Exception types shared across the package."""


class ParseError(ValueError):
    """A text form (polynomial, permutation, matrix, field tag) is malformed."""


class NotEnoughTypesError(ValueError):
    """Requested more distinct monomial types than exist at the given degree."""


class TruncationError(ValueError):
    """Input violates the variable or degree bounds of a truncation."""
