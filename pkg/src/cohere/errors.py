"""Exception types raised across the library."""


class CoherenceError(Exception):
    """Base class for all errors raised by this package."""


class NotHermitianError(CoherenceError):
    """Matrix deviates from its conjugate transpose beyond tolerance."""


class NotPSDError(CoherenceError):
    """Matrix has an eigenvalue below the allowed negative tolerance."""


class DimensionMismatchError(CoherenceError):
    """Operands act on spaces of different dimensions."""


class WrongDimensionError(CoherenceError):
    """Operation requires a specific dimension (e.g. qubit-only)."""


class LengthMismatchError(CoherenceError):
    """Probability vectors have different lengths."""


class InvalidDistributionError(CoherenceError):
    """Vector is not a probability distribution within tolerance."""


class BadParamLengthError(CoherenceError):
    """Parameter vector length does not match a d*d unitary chart."""


class OptimizerFailureError(CoherenceError):
    """Every optimizer restart produced a non-finite objective."""


class TracePreservationError(CoherenceError):
    """Kraus operators do not sum to the identity within tolerance."""


class NotDioError(CoherenceError):
    """Channel fails the dephasing-covariance check."""


class InvalidWeightsError(CoherenceError):
    """Convex weights are negative or do not sum to one."""


class UnsupportedStateError(CoherenceError):
    """Steered-state bookkeeping outside the supported family."""


class ParseError(CoherenceError):
    """File contents could not be decoded into the expected schema."""


class InvalidStateError(CoherenceError):
    """Decoded matrix is not a valid density matrix."""


class InvalidBasisError(CoherenceError):
    """Matrix columns do not form an orthonormal basis."""


class InvalidArgsError(CoherenceError):
    """Command-line arguments are out of the supported range."""
