"""Exception types shared across the package."""


class AuxZetaError(Exception):
    """Base class for all package-specific errors."""


class PoleProximityError(AuxZetaError):
    """Evaluation requested too close to a pole of the function."""


class RangeExceededError(AuxZetaError):
    """Argument outside the documented accuracy range of an evaluator."""


class ContourError(AuxZetaError):
    """Integration contour violates a geometric requirement."""


class QuadratureConvergenceError(AuxZetaError):
    """Step-halving refinement failed to reach the requested tolerance."""


class BudgetExceededError(AuxZetaError):
    """Input would exceed a documented computational budget."""


class CoverageError(AuxZetaError):
    """A sample stream does not cover enough of the integration range."""


class ConfigError(AuxZetaError):
    """Malformed run configuration file or value."""


class CacheIntegrityError(AuxZetaError):
    """Evaluation cache contains or would contain conflicting records."""
