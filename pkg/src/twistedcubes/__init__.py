"""Twisted cubes from Lie-type words and dominant weights: construction,
untwistedness via the Cartier-vector criterion, hesitant-walk detection, and
exhaustive equivalence verification."""

from .errors import (
    CapExceeded,
    DimensionMismatch,
    IndexOutOfRange,
    MalformedInput,
    NotAWitness,
    NotMinimalWitness,
    PreconditionViolated,
    RankOutOfRange,
    TwistedCubeError,
)
from .rootdata import LieType, adjacent, cartan_pairing, parse_lie_type, validate_lie_type
from .weightword import (
    DominantWeight,
    TwistData,
    Word,
    appears_in_lambda,
    derive_twist_data,
)
from .twistedcube import (
    LatticeCensus,
    contains,
    contains_PD,
    density,
    eval_A,
    lattice_points,
    signed_count,
)
from .cartier import (
    CartierVector,
    SignVector,
    UntwistResult,
    compute_m,
    hesitant_walk_from_twist_witness,
    is_untwisted,
    maximal_failing_index,
    witness_sigma_from_walk,
)
from .walks import (
    WalkWitness,
    find_hesitant_lambda_walk,
    find_hesitant_lambda_walk_naive,
    is_diagram_walk,
    is_hesitant_lambda_walk,
    is_lambda_walk,
    is_minimal,
    lambda_walk_from_positive_entry,
    minimize,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
