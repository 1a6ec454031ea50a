"""Diagram walks, hesitant lambda-walks, avoidance detection, and minimization."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceeded, NotAWitness, PreconditionViolated
from .rootdata import LieType, adjacent
from .weightword import DominantWeight, TwistData, Word, appears_in_lambda

KIND_DIAGRAM = "diagram_walk"
KIND_LAMBDA = "lambda_walk"
KIND_HESITANT = "hesitant_walk"
KIND_HESITANT_LAMBDA = "hesitant_lambda_walk"

NAIVE_N_CAP = 16


@dataclass(frozen=True)
class WalkWitness:
    """An increasing index sequence into a word, with the subword it selects."""

    positions: tuple[int, ...]
    subword: tuple[int, ...]
    kind: str

    def __post_init__(self):
        object.__setattr__(self, "positions", tuple(self.positions))
        object.__setattr__(self, "subword", tuple(self.subword))
        if list(self.positions) != sorted(set(self.positions)):
            raise NotAWitness(f"positions {self.positions} not strictly increasing")
        if len(self.positions) != len(self.subword):
            raise NotAWitness("positions and subword lengths disagree")

    @classmethod
    def from_word(cls, w: Word, positions, kind: str) -> "WalkWitness":
        positions = tuple(positions)
        return cls(positions, tuple(w.entries[p - 1] for p in positions), kind)


def is_diagram_walk(t: LieType, w: Word) -> bool:
    """Nonempty word whose successive roots are distinct and diagram-adjacent."""
    w.validate_for(t)
    if len(w) < 1:
        return False
    return all(adjacent(t, a, b) for a, b in zip(w.entries, w.entries[1:]))


def is_lambda_walk(t: LieType, w: Word, lam: DominantWeight) -> bool:
    """A diagram walk whose final root appears in lam."""
    return is_diagram_walk(t, w) and appears_in_lambda(lam, w.entries[-1])


def is_hesitant_lambda_walk(t: LieType, w: Word, lam: DominantWeight) -> bool:
    """First two letters equal, and the walking component (all but the first
    letter) is a lambda-walk."""
    w.validate_for(t)
    if len(w) < 2 or w.entries[0] != w.entries[1]:
        return False
    return is_lambda_walk(t, Word(w.entries[1:]), lam)


def find_hesitant_lambda_walk(t: LieType, w: Word, lam: DominantWeight) -> WalkWitness | None:
    """Canonical hesitant-lambda-walk subword, or None if w is avoiding.

    Quadratic reachability sweep, right to left: a position can start a
    lambda-walk iff its root appears in lam or some later adjacent position
    can.  Witnesses are canonicalized to the lexicographically smallest
    hesitation pair followed by the greedy minimal-index extension.
    """
    w.validate_for(t)
    if lam.rank != t.rank:
        raise NotAWitness(f"weight rank {lam.rank} does not match {t}")
    n = len(w)
    letters = w.entries
    reach = [False] * (n + 1)
    link: list[int | None] = [None] * (n + 1)
    for p in range(n, 0, -1):
        if appears_in_lambda(lam, letters[p - 1]):
            reach[p] = True
            continue
        for q in range(p + 1, n + 1):
            if reach[q] and adjacent(t, letters[p - 1], letters[q - 1]):
                reach[p] = True
                link[p] = q
                break
    for p in range(1, n + 1):
        for q in range(p + 1, n + 1):
            if letters[q - 1] == letters[p - 1] and reach[q]:
                positions = [p, q]
                cur = q
                while not appears_in_lambda(lam, letters[cur - 1]):
                    cur = link[cur]
                    assert cur is not None
                    positions.append(cur)
                return WalkWitness.from_word(w, positions, KIND_HESITANT_LAMBDA)
    return None


def find_hesitant_lambda_walk_naive(
    t: LieType, w: Word, lam: DominantWeight
) -> WalkWitness | None:
    """Oracle by exhaustive subword enumeration; capped at n <= 16.

    Returns some valid witness (not necessarily the canonical one) or None.
    """
    n = len(w)
    if n > NAIVE_N_CAP:
        raise CapExceeded(f"naive detector capped at n <= {NAIVE_N_CAP}, got {n}")
    letters = w.entries
    support = [appears_in_lambda(lam, i) for i in letters]
    adj = {
        (a, b)
        for a in range(1, t.rank + 1)
        for b in range(1, t.rank + 1)
        if adjacent(t, a, b)
    }
    # Bit-twiddled subset scan; per-mask work is dominated by the early
    # rejections (fewer than two set bits, or an unrepeated first letter).
    for mask in range(3, 1 << n):
        m = mask
        low = m & -m
        b0 = low.bit_length() - 1
        m ^= low
        if m == 0:
            continue
        low = m & -m
        b1 = low.bit_length() - 1
        if letters[b0] != letters[b1]:
            continue
        m ^= low
        prev = b1
        ok = True
        while m:
            low = m & -m
            b = low.bit_length() - 1
            m ^= low
            if (letters[prev], letters[b]) not in adj:
                ok = False
                break
            prev = b
        if ok and support[prev]:
            positions = [p + 1 for p in range(n) if mask >> p & 1]
            return WalkWitness.from_word(w, positions, KIND_HESITANT_LAMBDA)
    return None


def _require_hesitant(t: LieType, witness: WalkWitness, lam: DominantWeight) -> None:
    if not is_hesitant_lambda_walk(t, Word(witness.subword), lam):
        raise NotAWitness(f"subword {witness.subword} is not a hesitant lambda-walk")


def is_minimal(t: LieType, witness: WalkWitness, lam: DominantWeight) -> bool:
    """Minimality of a hesitant lambda-walk: the walking component visits each
    diagram vertex at most once, and (when it has length >= 2) only its final
    root appears in lam."""
    _require_hesitant(t, witness, lam)
    walking = witness.subword[1:]
    if len(set(walking)) != len(walking):
        return False
    if len(walking) >= 2 and any(appears_in_lambda(lam, i) for i in witness.subword[:-1]):
        return False
    return True


def minimize(t: LieType, witness: WalkWitness, lam: DominantWeight) -> WalkWitness:
    """Extract a minimal hesitant lambda-walk subword of the given witness.

    Truncate the walking component at its earliest root appearing in lam,
    then repeatedly splice out detours between repeated roots; the diagram
    being a tree, the seam stays adjacent.
    """
    _require_hesitant(t, witness, lam)
    head = witness.positions[0]
    walking = list(zip(witness.positions[1:], witness.subword[1:]))
    stop = next(i for i, (_, letter) in enumerate(walking) if appears_in_lambda(lam, letter))
    if stop == 0:
        positions = (head, walking[0][0])
    else:
        walking = walking[: stop + 1]
        i = 0
        while i < len(walking):
            dup = next(
                (b for b in range(i + 1, len(walking)) if walking[b][1] == walking[i][1]),
                None,
            )
            if dup is None:
                i += 1
            else:
                del walking[i + 1 : dup + 1]
        positions = (head,) + tuple(p for p, _ in walking)
    out = WalkWitness(
        positions,
        tuple(witness.subword[witness.positions.index(p)] for p in positions),
        KIND_HESITANT_LAMBDA,
    )
    assert is_minimal(t, out, lam)
    return out


def lambda_walk_from_positive_entry(
    d: TwistData, w: Word, sigma, k: int
) -> WalkWitness:
    """Greedy lambda-walk starting at a strictly positive Cartier entry.

    Requires m[k] > 0 and m[i] >= 0 for i > k; while the current ell is zero,
    steps to the minimal later index with negative c and positive m-entry.
    """
    from .cartier import compute_m  # local import: cartier builds on this module

    m = compute_m(d, sigma).m
    if not (m[k - 1] > 0 and all(v >= 0 for v in m[k:])):
        raise PreconditionViolated(f"need m[{k}] > 0 and nonnegative tail, got {m}")
    positions = [k]
    j = k
    while d.ell[j - 1] == 0:
        nxt = next(
            (q for q in range(j + 1, d.n + 1) if d.c_at(j, q) < 0 and m[q - 1] > 0),
            None,
        )
        if nxt is None:
            raise PreconditionViolated(f"greedy extension stuck at {j} (negative ell?)")
        positions.append(nxt)
        j = nxt
    return WalkWitness.from_word(w, positions, KIND_LAMBDA)
