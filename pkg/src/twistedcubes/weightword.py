"""Words, dominant weights, and the constants (c, ell) they induce.

The pairing-order convention is the single most error-prone point in the
whole construction, so it is stated once here and tested hard: for positions
j < k in the word,

    c[j, k] = cartan_pairing(t, word[k], word[j])

i.e. the k-th letter's root paired against the j-th letter's coroot (row
word[k], column word[j] of the Cartan matrix).  In type B3 the word (3, 2)
therefore gets c[1, 2] = -2, not -1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DimensionMismatch, IndexOutOfRange
from .rootdata import LieType, cartan_pairing

#: Default cap on word length; sign-vector sweeps downstream are 2**n.
DEFAULT_N_CAP = 20


@dataclass(frozen=True)
class Word:
    """A sequence of simple-root indices (1-based), not necessarily reduced."""

    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))

    def __len__(self) -> int:
        return len(self.entries)

    def validate_for(self, t: LieType) -> None:
        for i in self.entries:
            if not 1 <= i <= t.rank:
                raise DimensionMismatch(f"word letter {i} outside [1, {t.rank}] for {t}")


@dataclass(frozen=True)
class DominantWeight:
    """Nonnegative integer coefficients on the fundamental weights."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(self.coefficients)
        if any(c < 0 for c in coeffs):
            raise DimensionMismatch(f"dominant weight needs nonnegative coefficients: {coeffs}")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def rank(self) -> int:
        return len(self.coefficients)

    def scaled(self, factor: int) -> "DominantWeight":
        return DominantWeight(tuple(factor * c for c in self.coefficients))


def appears_in_lambda(lam: DominantWeight, i: int) -> bool:
    """Whether the i-th simple root appears in lam (coefficient > 0)."""
    if not 1 <= i <= lam.rank:
        raise IndexOutOfRange(f"root index {i} outside [1, {lam.rank}]")
    return lam.coefficients[i - 1] > 0


@dataclass(frozen=True)
class TwistData:
    """The integers c[j, k] (1 <= j < k <= n) and ell defining one twisted cube.

    Raw construction permits arbitrary integers; data derived from a dominant
    weight always has ell >= 0.
    """

    n: int
    c: dict[tuple[int, int], int] = field(default_factory=dict)
    ell: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "ell", tuple(self.ell))
        if len(self.ell) != self.n:
            raise DimensionMismatch(f"ell has length {len(self.ell)}, expected {self.n}")
        clean: dict[tuple[int, int], int] = {}
        for (j, k), v in self.c.items():
            if not 1 <= j < k <= self.n:
                raise DimensionMismatch(f"c index ({j}, {k}) outside 1 <= j < k <= {self.n}")
            if v != 0:
                clean[(j, k)] = v
        object.__setattr__(self, "c", clean)

    def c_at(self, j: int, k: int) -> int:
        """c[j, k] for j < k; absent entries are 0."""
        if not 1 <= j < k <= self.n:
            raise DimensionMismatch(f"c index ({j}, {k}) outside 1 <= j < k <= {self.n}")
        return self.c.get((j, k), 0)


def derive_twist_data(t: LieType, w: Word, lam: DominantWeight) -> TwistData:
    """The twisted-cube constants of (t, w, lam)."""
    w.validate_for(t)
    if lam.rank != t.rank:
        raise DimensionMismatch(f"weight has rank {lam.rank}, expected {t.rank}")
    n = len(w)
    letters = w.entries
    c = {
        (j, k): cartan_pairing(t, letters[k - 1], letters[j - 1])
        for j in range(1, n + 1)
        for k in range(j + 1, n + 1)
    }
    ell = tuple(lam.coefficients[i - 1] for i in letters)
    return TwistData(n=n, c=c, ell=ell)
