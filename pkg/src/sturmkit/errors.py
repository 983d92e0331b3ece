"""Exception hierarchy shared by every sturmkit module."""


class SturmkitError(Exception):
    """Base class; the CLI maps it to exit code 2."""


class DomainError(SturmkitError, ValueError):
    """An argument lies outside the domain of the operation."""


class FieldMismatchError(DomainError):
    """Two quadratic numbers live in different fields Q(sqrt d)."""


class ResourceError(SturmkitError):
    """A configured bound (depth cap, step budget) was exceeded."""


class ClassificationError(SturmkitError):
    """No continued-fraction form matched within the search bound."""


class NotProlongableError(DomainError):
    """The morphism has no letter whose iterates grow to an infinite word."""


class ConjugationError(DomainError):
    """The conjugate morphism Psi_gamma is undefined for this gamma."""


class NotInMonoidError(DomainError):
    """A morphism does not factor over the requested generators."""


class NoFixedPointError(SturmkitError):
    """The fixed-point equation has no admissible solution."""


class AmbiguousRhoError(NoFixedPointError):
    """The intercept equation degenerates to 0 = 0 (a line of fixed points)."""


class NotFoundError(SturmkitError):
    """A bounded search finished without a result (CLI exit code 3)."""
