"""Exception hierarchy shared by all rrspectra modules."""


class SpectraError(Exception):
    """Base class for all rrspectra errors."""


class ImaginaryResidue(SpectraError):
    """A coefficient that must be exactly real has a nonzero imaginary part."""


class DegenerateParameter(SpectraError):
    """A Pochhammer denominator in a truncated hypergeometric sum vanished."""


class NonIntegrable(SpectraError):
    """The requested inner product does not converge."""


class ZeroPolynomial(SpectraError):
    """Root isolation was asked for the identically-zero polynomial."""


class StepFailure(SpectraError):
    """Adaptive ODE integration could not meet its tolerance."""


class OutOfGrid(SpectraError):
    """Evaluation requested outside the stored variable-map grid."""


class BranchUndefined(SpectraError):
    """The square-root branch is evaluated exactly at its branch point."""


class NoSuchRoot(SpectraError):
    """The quartic has no root of the requested kind at the requested order."""


class ConventionUnresolved(SpectraError):
    """No candidate index/sign convention drives the residual below the gate."""


class NodeDetected(SpectraError):
    """A factorization function changes sign on the grid."""


class PreconditionViolated(SpectraError):
    """An operation-level precondition does not hold."""


class NotConverged(SpectraError):
    """An iterative numeric procedure exhausted its budget."""


class InsufficientDecay(SpectraError):
    """The sampled potential does not decay at the grid ends."""


class AmbiguousZero(SpectraError):
    """A sampled function is numerically zero over an interval."""


class ConfigError(SpectraError):
    """A run configuration is malformed or violates an invariant."""
