"""Immutable root-system reference data: Dynkin diagrams and Cartan matrices.

Root indices are 1-based everywhere, matching the usual textbook vertex
labels (in the E series, vertex 2 hangs off vertex 4).  Conventions:
``cartan_pairing(t, i, j)`` is the pairing of the i-th simple root against
the j-th simple coroot, i.e. the row-i column-j entry of the Cartan matrix.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import IndexOutOfRange, RankOutOfRange
from ._cartan_literals import _LITERAL_TABLES

#: Hard upper bound on rank; everything of interest lives at tiny rank.
MAX_RANK = 32

#: Minimal admissible rank per family (E is handled separately).
_RANK_FLOOR = {"A": 1, "B": 2, "C": 3, "D": 4, "F": 4, "G": 2}

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")


@dataclass(frozen=True, order=True)
class LieType:
    """A Dynkin family letter plus rank, e.g. B3."""

    family: str
    rank: int

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def validate_lie_type(family: str, rank: int, max_rank: int = MAX_RANK) -> LieType:
    """Return a validated LieType or raise RankOutOfRange."""
    if family not in FAMILIES:
        raise RankOutOfRange(f"unknown family {family!r}; expected one of {FAMILIES}")
    if family == "E":
        if rank not in (6, 7, 8):
            raise RankOutOfRange(f"E requires rank in {{6, 7, 8}}, got {rank}")
    elif family == "F":
        if rank != 4:
            raise RankOutOfRange(f"F requires rank 4, got {rank}")
    elif family == "G":
        if rank != 2:
            raise RankOutOfRange(f"G requires rank 2, got {rank}")
    else:
        floor = _RANK_FLOOR[family]
        if not floor <= rank <= max_rank:
            raise RankOutOfRange(
                f"{family} requires {floor} <= rank <= {max_rank}, got {rank}"
            )
    return LieType(family, rank)


_TYPE_RE = re.compile(r"^([A-G])([0-9]+)$")


def parse_lie_type(text: str) -> LieType:
    """Parse the serialized form 'A5', 'E7', 'G2'."""
    m = _TYPE_RE.match(text.strip())
    if not m:
        raise RankOutOfRange(f"cannot parse Lie type {text!r}")
    return validate_lie_type(m.group(1), int(m.group(2)))


def _diagram_edges(t: LieType) -> list[tuple[int, int]]:
    """Edges of the Dynkin diagram (1-based, i < j)."""
    fam, r = t.family, t.rank
    if fam in ("A", "B", "C"):
        return [(i, i + 1) for i in range(1, r)]
    if fam == "D":
        return [(i, i + 1) for i in range(1, r - 1)] + [(r - 2, r)]
    if fam == "E":
        chain = [1, 3] + list(range(4, r + 1))
        edges = [tuple(sorted(p)) for p in zip(chain, chain[1:])]
        return sorted(edges + [(2, 4)])
    if fam == "F":
        return [(1, 2), (2, 3), (3, 4)]
    return [(1, 2)]  # G2


def _generate_cartan(t: LieType) -> tuple[tuple[int, ...], ...]:
    """Build the Cartan matrix from the diagram plus short/long-edge rules."""
    r = t.rank
    m = [[2 if i == j else 0 for j in range(r)] for i in range(r)]
    for i, j in _diagram_edges(t):
        m[i - 1][j - 1] = -1
        m[j - 1][i - 1] = -1
    # Multiple edges, read against the arrow: the long root pairs to -1, the
    # short one to -2 (or -3 in G2).
    if t.family == "B":
        m[r - 2][r - 1] = -2
    elif t.family == "C":
        m[r - 1][r - 2] = -2
    elif t.family == "F":
        m[1][2] = -2
    elif t.family == "G":
        m[1][0] = -3
    return tuple(tuple(row) for row in m)


@lru_cache(maxsize=None)
def cartan_table(t: LieType) -> tuple[tuple[int, ...], ...]:
    """The full Cartan matrix of t, cross-checked against literals at rank <= 9."""
    table = _generate_cartan(t)
    literal = _LITERAL_TABLES.get(str(t))
    if literal is not None:
        assert table == literal, f"generated Cartan table for {t} disagrees with literal"
    return table


def cartan_pairing(t: LieType, i: int, j: int) -> int:
    """Pairing of the i-th simple root against the j-th simple coroot."""
    _check_index(t, i)
    _check_index(t, j)
    return cartan_table(t)[i - 1][j - 1]


def adjacent(t: LieType, i: int, j: int) -> bool:
    """Whether roots i and j are joined by a Dynkin-diagram edge."""
    _check_index(t, i)
    _check_index(t, j)
    return i != j and cartan_table(t)[i - 1][j - 1] < 0


def _check_index(t: LieType, i: int) -> None:
    if not 1 <= i <= t.rank:
        raise IndexOutOfRange(f"root index {i} outside [1, {t.rank}] for {t}")


def all_types_up_to_rank(max_rank: int) -> list[LieType]:
    """Every admissible LieType with rank <= max_rank, in canonical order."""
    out: list[LieType] = []
    for fam in FAMILIES:
        if fam == "E":
            ranks = [r for r in (6, 7, 8) if r <= max_rank]
        elif fam == "F":
            ranks = [4] if max_rank >= 4 else []
        elif fam == "G":
            ranks = [2] if max_rank >= 2 else []
        else:
            ranks = range(_RANK_FLOOR[fam], max_rank + 1)
        out.extend(LieType(fam, r) for r in ranks)
    return out
