"""The twisted cube itself: membership, density, and lattice enumeration.

Membership at arbitrary rational points uses exact Fraction arithmetic; the
lattice enumeration stays in pure integers (the bounding functions are
integer-valued on integer inputs, so there is no rounding question).
"""

from __future__ import annotations

from dataclasses import dataclass
from numbers import Rational
from typing import Iterable, Sequence

from .errors import CapExceeded, DimensionMismatch, IndexOutOfRange
from .weightword import DEFAULT_N_CAP, TwistData

Coord = Rational  # int or Fraction


def _check_dim(d: TwistData, x: Sequence[Coord]) -> None:
    if len(x) != d.n:
        raise DimensionMismatch(f"point has dimension {len(x)}, expected {d.n}")


def eval_A(d: TwistData, j: int, x: Sequence[Coord]):
    """The affine upper/lower bound on coordinate j: ell_j - sum_{k>j} c[j,k] x_k.

    Depends only on coordinates j+1..n; in particular the top level is the
    constant ell_n.
    """
    if not 1 <= j <= d.n:
        raise IndexOutOfRange(f"index {j} outside [1, {d.n}]")
    _check_dim(d, x)
    return d.ell[j - 1] - sum(v * x[k - 1] for (jj, k), v in d.c.items() if jj == j)


def _coordinate_ok(a, xj) -> bool:
    """One coordinate's membership condition: a < x < 0 or 0 <= x <= a."""
    return (a < xj < 0) or (0 <= xj <= a)


def contains(d: TwistData, x: Sequence[Coord]) -> bool:
    """Whether x lies in the twisted cube C(c, ell)."""
    _check_dim(d, x)
    return all(_coordinate_ok(eval_A(d, j, x), x[j - 1]) for j in range(1, d.n + 1))


def contains_PD(d: TwistData, x: Sequence[Coord]) -> bool:
    """Whether x lies in the all-weak-inequalities polytope 0 <= x_j <= A_j(x)."""
    _check_dim(d, x)
    return all(0 <= x[j - 1] <= eval_A(d, j, x) for j in range(1, d.n + 1))


def _sgn(v) -> int:
    """The density sign convention: 1 on negatives, -1 on [0, inf)."""
    return 1 if v < 0 else -1


def density(d: TwistData, x: Sequence[Coord]) -> int:
    """The signed density: 0 outside C, else (-1)^n times the sign product."""
    if not contains(d, x):
        return 0
    rho = (-1) ** d.n
    for v in x:
        rho *= _sgn(v)
    return rho


@dataclass(frozen=True)
class LatticeCensus:
    """All integer points of a twisted cube, each tagged with its density."""

    points: tuple[tuple[tuple[int, ...], int], ...]
    num_positive: int
    num_negative: int

    @property
    def signed_count(self) -> int:
        return self.num_positive - self.num_negative


def _c_row(d: TwistData, j: int) -> list[tuple[int, int]]:
    return [(k, v) for (jj, k), v in d.c.items() if jj == j]


def lattice_points(d: TwistData, cap: int = DEFAULT_N_CAP) -> LatticeCensus:
    """Enumerate the integer points of C(c, ell) exactly, back to front.

    At level j, with the tail coordinates fixed, the bound A_j is a known
    integer a; the admissible values are {0..a} when a >= 0 and the open-side
    integers {a+1..-1} when a < 0 (empty at a = -1).
    """
    if d.n > cap:
        raise CapExceeded(f"n = {d.n} exceeds cap {cap}")
    rows = [_c_row(d, j) for j in range(1, d.n + 1)]
    points: list[tuple[int, ...]] = []

    def descend(j: int, tail: dict[int, int]) -> None:
        if j == 0:
            coords = tuple(tail[k] for k in range(1, d.n + 1))
            points.append(coords)
            return
        a = d.ell[j - 1] - sum(v * tail[k] for k, v in rows[j - 1])
        values: Iterable[int] = range(0, a + 1) if a >= 0 else range(a + 1, 0)
        for xj in values:
            tail[j] = xj
            descend(j - 1, tail)
        tail.pop(j, None)

    descend(d.n, {})
    points.sort()
    tagged = tuple((p, density(d, p)) for p in points)
    assert all(rho in (-1, 1) for _, rho in tagged)
    pos = sum(1 for _, rho in tagged if rho == 1)
    return LatticeCensus(points=tagged, num_positive=pos, num_negative=len(tagged) - pos)


def signed_count(d: TwistData, cap: int = DEFAULT_N_CAP) -> int:
    """Number of lattice points with density +1 minus those with -1."""
    return lattice_points(d, cap=cap).signed_count


def brute_force_census(d: TwistData, box: int | None = None) -> LatticeCensus:
    """Independent oracle: test every integer point of an enclosing box.

    Per-coordinate half-widths default to the running worst-case bound
    |x_j| <= |ell_j| + sum_{k>j} |c_jk| B_k; intended for tiny n only.
    """
    if d.n == 0:
        return lattice_points(d)
    if box is not None:
        bounds = [box] * d.n
    else:
        bounds = [0] * d.n
        for j in range(d.n, 0, -1):
            bounds[j - 1] = abs(d.ell[j - 1]) + sum(
                abs(v) * bounds[k - 1] for (jj, k), v in d.c.items() if jj == j
            )
    pts: list[tuple[tuple[int, ...], int]] = []

    def walk(coords: list[int]) -> None:
        if len(coords) == d.n:
            rho = density(d, coords)
            if rho != 0:
                pts.append((tuple(coords), rho))
            return
        b = bounds[len(coords)]
        for v in range(-b, b + 1):
            walk(coords + [v])

    walk([])
    pts.sort()
    pos = sum(1 for _, rho in pts if rho == 1)
    return LatticeCensus(points=tuple(pts), num_positive=pos, num_negative=len(pts) - pos)
