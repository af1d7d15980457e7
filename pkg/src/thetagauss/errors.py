"""Exception types shared across the package."""


class ThetaGaussError(Exception):
    """Base class for all package errors."""


class NonPositiveScale(ThetaGaussError, ValueError):
    """Scale parameter t must be strictly positive."""


class TruncationBudgetExceeded(ThetaGaussError, RuntimeError):
    """Series tail cannot be brought below the requested eps within max_terms."""


class DerivativeOrderTooLarge(ThetaGaussError, ValueError):
    """Requested derivative order exceeds the configured cap."""


class DimensionMismatch(ThetaGaussError, ValueError):
    """Frequency / lattice point has the wrong number of coordinates."""


class GridTooSmall(ThetaGaussError, ValueError):
    """Embedding grid too small for the signal support."""


class InvalidExponent(ThetaGaussError, ValueError):
    """Norm / variation exponent outside its admissible range."""


class InvalidThreshold(ThetaGaussError, ValueError):
    """Jump threshold lambda must be strictly positive."""


class InvalidPartition(ThetaGaussError, ValueError):
    """Oscillation partition boundaries must be strictly increasing."""


class QuadratureBudgetExceeded(ThetaGaussError, RuntimeError):
    """Adaptive quadrature could not reach the target accuracy within budget."""


class DecayBoundViolated(ThetaGaussError, ValueError):
    """Declared decay bound of a time function fails its sampled verification."""


class OrderTooLarge(ThetaGaussError, ValueError):
    """Combinatorial enumeration order exceeds the configured cap."""


class InsufficientDerivatives(ThetaGaussError, ValueError):
    """Derivative value array is shorter than the requested order needs."""


class IncompatibleGrid(ThetaGaussError, ValueError):
    """Grid specification lacks an axis required by the requested check."""


class ResourceBudgetExceeded(ThetaGaussError, RuntimeError):
    """Sweep size exceeds the configured cell cap."""


class DomainError(ThetaGaussError, ValueError):
    """Argument outside the mathematical domain of the map."""
