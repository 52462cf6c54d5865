"""Exception types shared across the package."""


class DomainError(ValueError):
    """Argument outside the domain of a function or representation."""


class BranchError(DomainError):
    """Argument outside the interval on which a closed form is single-valued."""


class NoSolutionError(DomainError):
    """Parameters for which no real static solution exists."""


class PoleError(ArithmeticError):
    """Evaluation at a pole (vanishing denominator)."""


class NumericError(ArithmeticError):
    """Result cannot be computed reliably in double precision."""
