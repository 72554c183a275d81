"""Exception hierarchy shared by all modules."""


class RelBargmannError(Exception):
    """Base class for all library errors."""


class DomainError(RelBargmannError):
    """An argument lies outside the validated evaluation domain."""


class PoleError(RelBargmannError):
    """A gamma factor or denominator Pochhammer symbol hits a pole."""


class NonConvergenceError(RelBargmannError):
    """A series or quadrature did not converge within its budget."""


class InputFormatError(RelBargmannError):
    """An input file or sampled function fails validation."""
