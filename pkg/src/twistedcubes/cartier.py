"""Cartier vectors m_sigma, the untwistedness criterion, and both
constructive witness directions between sign-vector failures and hesitant
lambda-walks."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    CapExceeded,
    DimensionMismatch,
    NotMinimalWitness,
    PreconditionViolated,
)
from .walks import KIND_HESITANT_LAMBDA, WalkWitness, lambda_walk_from_positive_entry
from .weightword import DEFAULT_N_CAP, TwistData, Word

MINUS = "-"
PLUS = "+"


@dataclass(frozen=True)
class SignVector:
    """An element of {+, -}^n."""

    signs: tuple[str, ...]

    def __post_init__(self):
        signs = tuple(self.signs)
        if any(s not in (PLUS, MINUS) for s in signs):
            raise DimensionMismatch(f"signs must be '+'/'-': {signs}")
        object.__setattr__(self, "signs", signs)

    def __str__(self) -> str:
        return "".join(self.signs)

    def __len__(self) -> int:
        return len(self.signs)

    @classmethod
    def from_string(cls, text: str) -> "SignVector":
        return cls(tuple(text))

    @classmethod
    def minus_at(cls, n: int, positions) -> "SignVector":
        marked = set(positions)
        return cls(tuple(MINUS if p in marked else PLUS for p in range(1, n + 1)))


@dataclass(frozen=True)
class CartierVector:
    """The integer vector m_sigma; zero wherever sigma is +."""

    m: tuple[int, ...]

    @property
    def min_entry(self) -> int:
        return min(self.m) if self.m else 0


@dataclass(frozen=True)
class UntwistResult:
    """Verdict of the nonnegativity criterion, with a failing witness if any."""

    untwisted: bool
    sigma: SignVector | None = None
    k: int | None = None
    m: CartierVector | None = None

    def to_json(self) -> dict:
        if self.untwisted:
            return {"untwisted": True}
        return {
            "untwisted": False,
            "sigma": str(self.sigma),
            "k": self.k,
            "m": list(self.m.m),
        }


def compute_m(d: TwistData, sigma: SignVector) -> CartierVector:
    """Descending recursion: m_k is 0 at a plus sign, else the bound function
    evaluated at the already-computed tail."""
    if len(sigma) != d.n:
        raise DimensionMismatch(f"sigma has length {len(sigma)}, expected {d.n}")
    m = [0] * d.n
    for k in range(d.n, 0, -1):
        if sigma.signs[k - 1] == MINUS:
            m[k - 1] = d.ell[k - 1] - sum(
                v * m[s - 1] for (j, s), v in d.c.items() if j == k
            )
    return CartierVector(tuple(m))


def is_untwisted(d: TwistData, cap: int = DEFAULT_N_CAP) -> UntwistResult:
    """Sweep all 2^n sign vectors; untwisted iff every m_sigma is entrywise
    nonnegative.  On failure reports the lexicographically first (sigma, k),
    with + ordered before -."""
    if d.n > cap:
        raise CapExceeded(f"n = {d.n} exceeds cap {cap}")
    for raw in itertools.product((PLUS, MINUS), repeat=d.n):
        sigma = SignVector(raw)
        mv = compute_m(d, sigma)
        for k, value in enumerate(mv.m, start=1):
            if value < 0:
                return UntwistResult(untwisted=False, sigma=sigma, k=k, m=mv)
    return UntwistResult(untwisted=True)


def maximal_failing_index(d: TwistData, sigma: SignVector) -> int:
    """The largest k with m_sigma[k] < 0; raises if m_sigma is nonnegative."""
    m = compute_m(d, sigma).m
    for k in range(d.n, 0, -1):
        if m[k - 1] < 0:
            return k
    raise PreconditionViolated(f"m_sigma = {m} has no negative entry")


def witness_sigma_from_walk(
    d: TwistData, positions
) -> tuple[SignVector, CartierVector]:
    """Sign vector with minus exactly on a minimal hesitant lambda-walk, and
    its Cartier vector; the leading entry is guaranteed negative.

    The minimality preconditions are re-checked against d at the level of the
    constants themselves (repetition entry >= 2, adjacent steps negative,
    non-consecutive walking pairs zero, interior ells zero); failures raise
    NotMinimalWitness.
    """
    J = tuple(positions)
    if list(J) != sorted(set(J)) or len(J) < 2 or not (1 <= J[0] and J[-1] <= d.n):
        raise NotMinimalWitness(f"positions {J} are not an increasing index sequence")
    s = len(J) - 1
    if d.c_at(J[0], J[1]) < 2:
        raise NotMinimalWitness(f"c[{J[0]}, {J[1]}] = {d.c_at(J[0], J[1])} < 2: no hesitation")
    if d.ell[J[-1] - 1] <= 0:
        raise NotMinimalWitness(f"ell[{J[-1]}] = {d.ell[J[-1] - 1]} is not positive")
    if s == 1:
        if d.ell[J[0] - 1] != d.ell[J[1] - 1]:
            raise NotMinimalWitness("length-2 walk needs equal ells at both positions")
    else:
        for t in range(1, s):
            if d.c_at(J[t], J[t + 1]) >= 0:
                raise NotMinimalWitness(f"walking step c[{J[t]}, {J[t + 1]}] not negative")
        for p in range(0, s):
            if d.ell[J[p] - 1] != 0:
                raise NotMinimalWitness(f"interior ell[{J[p]}] nonzero")
        for p in range(1, s + 1):
            for q in range(p + 2, s + 1):
                if d.c_at(J[p], J[q]) != 0:
                    raise NotMinimalWitness(f"walking pair c[{J[p]}, {J[q]}] nonzero")
        for q in range(2, s + 1):
            if d.c_at(J[0], J[q]) != d.c_at(J[1], J[q]):
                raise NotMinimalWitness(
                    f"hesitation inconsistency: c[{J[0]}, {J[q]}] != c[{J[1]}, {J[q]}]"
                )
    sigma = SignVector.minus_at(d.n, J)
    mv = compute_m(d, sigma)
    assert mv.m[J[0] - 1] < 0, "minimal walk failed to certify twistedness"
    return sigma, mv


def hesitant_walk_from_twist_witness(
    d: TwistData, w: Word, sigma: SignVector, k: int
) -> WalkWitness:
    """Rebuild a hesitant lambda-walk from a failing Cartier entry.

    Requires m[k] < 0 with a nonnegative tail (k the maximal failing index);
    picks the minimal later position with positive c-entry and positive m,
    then extends by the greedy lambda-walk construction.
    """
    m = compute_m(d, sigma).m
    if m[k - 1] >= 0:
        raise PreconditionViolated(f"m[{k}] = {m[k - 1]} is not negative")
    if any(v < 0 for v in m[k:]):
        raise PreconditionViolated(f"m has negative entries beyond {k}: {m}")
    p = next(
        (q for q in range(k + 1, d.n + 1) if d.c_at(k, q) > 0 and m[q - 1] > 0),
        None,
    )
    if p is None:
        raise PreconditionViolated(f"no repetition candidate after {k} (negative ell?)")
    tail = lambda_walk_from_positive_entry(d, w, sigma, p)
    return WalkWitness.from_word(w, (k,) + tail.positions, KIND_HESITANT_LAMBDA)
