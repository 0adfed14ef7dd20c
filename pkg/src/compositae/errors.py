"""Exception types shared across the package."""


class CompositaeError(Exception):
    """Base class for every domain error raised by this package."""


class NonzeroConstantTerm(CompositaeError):
    """A composita was requested for a series whose constant term is not zero."""


class ZeroConstantTerm(CompositaeError):
    """An operation needed a series with a nonzero constant term."""


class DivisionByNonUnit(CompositaeError):
    """Series division by a series whose constant term is zero."""


class NonInvertible(CompositaeError):
    """Compositional inversion of a series with a vanishing linear coefficient."""


class OrderMismatch(CompositaeError):
    """Two operands were required to share the same truncation order."""


class InsufficientOrder(CompositaeError):
    """An input was not supplied with enough coefficients for the request."""


class UnknownFunction(CompositaeError):
    """A catalog designator did not name a known generating function."""


class NoClosedForm(CompositaeError):
    """The catalog entry has no closed-form triangle formula."""
