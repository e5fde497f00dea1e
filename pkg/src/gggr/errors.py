"""Exception types shared across the package."""


class CapExceededError(ValueError):
    """A size cap was exceeded (combinatorial explosion guard)."""


class VariableMismatchError(ValueError):
    """Two polynomials over different formal variables were combined."""


class NonExactDivisionError(ArithmeticError):
    """A division that must be exact left a nonzero remainder."""


class NegativeValuationError(ZeroDivisionError):
    """A Laurent polynomial with negative valuation was evaluated at zero."""
