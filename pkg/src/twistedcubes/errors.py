"""Exception hierarchy shared across the package."""


class TwistedCubeError(Exception):
    """Base class for all package errors."""


class RankOutOfRange(TwistedCubeError):
    """Family/rank pair outside the admissible bounds."""


class IndexOutOfRange(TwistedCubeError):
    """Root or coordinate index outside [1, rank] / [1, n]."""


class DimensionMismatch(TwistedCubeError):
    """Vector length disagrees with the ambient dimension."""


class CapExceeded(TwistedCubeError):
    """Requested n exceeds the configured exhaustive-sweep cap."""


class NotAWitness(TwistedCubeError):
    """Claimed walk witness fails its defining predicate."""


class NotMinimalWitness(TwistedCubeError):
    """Walk witness fails the minimality preconditions."""


class PreconditionViolated(TwistedCubeError):
    """Constructive operation called outside its stated precondition."""


class MalformedInput(TwistedCubeError):
    """Instance or sweep file does not match any accepted schema."""
