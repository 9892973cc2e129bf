"""Exception taxonomy shared across the package."""


class HahnlabError(Exception):
    """Base class for all errors raised by this package."""


class PoleError(HahnlabError):
    """A gamma function or Pochhammer denominator hit a pole."""


class DomainError(HahnlabError):
    """A precondition on parameters or arguments is violated."""


class RangeOverflowError(HahnlabError):
    """A log-domain value cannot be exponentiated into a finite double."""


class QuadratureError(HahnlabError):
    """Adaptive quadrature failed to converge within its budget."""


class ExactInputError(HahnlabError):
    """Exact-mode input was not exact (floats are rejected, never coerced)."""


class StructureError(HahnlabError):
    """An exact structural assertion failed (e.g. a recurrence expansion
    produced nonzero coefficients where the three-term form requires zeros)."""
