"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input lies outside the mathematical domain of the operation."""


class DegreeError(ValueError):
    """Requested Bernstein bidegree is below the polynomial's degree."""


class NotAdmissible(Exception):
    """The parameter pair has an empty admissible interval."""


class NoSignChange(Exception):
    """The monotone function has no sign change over the admissible interval."""


class NonConvergence(Exception):
    """An iterative solve failed to reach tolerance within its budget."""


class DegenerateError(Exception):
    """The requested quantity is undefined at a degenerate parameter."""


class PreconditionError(Exception):
    """An analytic precondition (e.g. Schwarz-Pick) fails for the inputs."""


class CertificateMismatch(Exception):
    """A computed certificate entry differs from the expected exact value."""
