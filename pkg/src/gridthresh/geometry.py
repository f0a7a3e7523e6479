"""Exact lattice-line geometry: zero-sets, equivalence, stability.

A line is stored with doubled coefficients (a2, b2, c2), standing for
a2*x + b2*y + c2/2 <= 0.  The sign test at a lattice point is then the
pure integer comparison 2*(a2*x + b2*y) + c2 <= 0: an odd c2 encodes a
half-step offset whose line misses every lattice point, so no epsilon or
floating point reasoning appears anywhere.

A threshold function is a dichotomy of the grid realizable this way; it
is stored as a bit-set of its zeros.  A function is *stable* when some
defining line passes through at least two lattice points; otherwise it is
*unstable* and all its defining pointed lines share a single lattice
point, the vertex.

The candidate family scanned by classification (and reused by the
enumeration oracle) consists of every line with a primitive direction
(dx, dy), |dx| <= 2m+1, |dy| <= 2n+1, at every offset through a lattice
point plus the half-step offsets on either side, in both orientations.
Stable directions are differences of lattice points (components within
m, n); a defining line of an unstable function can be chosen with the
mediant of the two adjacent stable directions at its vertex (components
within 2m, 2n); the extra margin of one covers the axis cases.  The
subset-separability oracle independently corroborates this family on
every grid where both run.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Literal, Optional, Sequence

import numpy as np

from .grid import GridSpec, Point


@dataclass(frozen=True)
class Line:
    """Oriented line a2*x + b2*y + c2/2 <= 0 with integer coefficients.

    Orientation is significant: negating all three coefficients exchanges
    the open and closed sides.  (a2, b2) must not be (0, 0).
    """

    a2: int
    b2: int
    c2: int

    def __post_init__(self) -> None:
        if self.a2 == 0 and self.b2 == 0:
            raise ValueError("line normal must be non-zero")

    def eval2(self, x: int, y: int) -> int:
        """Twice the affine form at (x, y); zero iff the point lies on the line."""
        return 2 * (self.a2 * x + self.b2 * y) + self.c2

    def canonical(self) -> "Line":
        """Divide out any common positive factor (orientation preserved).

        Only a factor shared by all three coefficients can be removed
        without moving the line, since c2 carries the half-step parity.
        """
        g = math.gcd(self.a2, self.b2, self.c2)
        if g > 1:
            return Line(self.a2 // g, self.b2 // g, self.c2 // g)
        return self

    def flipped(self) -> "Line":
        """The same carrier line with the opposite orientation."""
        return Line(-self.a2, -self.b2, -self.c2)

    @classmethod
    def through(cls, p: Point, q: Point) -> "Line":
        """The line through two distinct lattice points, primitive normal."""
        if p == q:
            raise ValueError("two distinct points required")
        dx, dy = q[0] - p[0], q[1] - p[1]
        g = math.gcd(abs(dx), abs(dy))
        a, b = dy // g, -dx // g
        return cls(a, b, -2 * (a * p[0] + b * p[1]))

    @property
    def is_horizontal(self) -> bool:
        return self.a2 == 0

    @property
    def is_vertical(self) -> bool:
        return self.b2 == 0

    @property
    def is_inclined(self) -> bool:
        return self.a2 != 0 and self.b2 != 0

    @property
    def slope_sign(self) -> int:
        """Sign of the slope -a2/b2 for inclined lines, else 0."""
        if not self.is_inclined:
            return 0
        return 1 if (self.a2 > 0) != (self.b2 > 0) else -1


@dataclass(frozen=True)
class ThresholdFn:
    """A grid dichotomy stored as a bit-set of its zeros.

    Bit grid.bit_index(x, y) is set iff f(x, y) = 0.  Instances are
    hashable; identity of functions is extensional equality of zero-sets.
    Realizability (existence of a defining line) is an oracle-level
    property checked by oracle.enumerate_by_subsets, not enforced here.
    """

    grid: GridSpec
    zeros: int

    def __post_init__(self) -> None:
        if not 0 <= self.zeros < (1 << self.grid.point_count):
            raise ValueError("zeros bit-set out of range for grid")

    def value_at(self, x: int, y: int) -> int:
        return 0 if (self.zeros >> self.grid.bit_index(x, y)) & 1 else 1

    def zero_points(self) -> list[Point]:
        return [self.grid.point_at(i) for i in range(self.grid.point_count)
                if (self.zeros >> i) & 1]

    @property
    def is_constant(self) -> bool:
        return self.zeros == 0 or self.zeros == (1 << self.grid.point_count) - 1

    @property
    def in_f_class(self) -> bool:
        """Member of F: f(0, 0) = 0 and f is not the constant zero."""
        return bool(self.zeros & 1) and self.zeros != (1 << self.grid.point_count) - 1

    def flip(self) -> "ThresholdFn":
        """The pointwise complement 1 - f(x, y)."""
        return ThresholdFn(self.grid, self.zeros ^ ((1 << self.grid.point_count) - 1))

    def render(self) -> str:
        """ASCII grid of function values, rows top to bottom."""
        rows = []
        for y in range(self.grid.n, -1, -1):
            rows.append("".join(str(self.value_at(x, y)) for x in range(self.grid.m + 1)))
        return "\n".join(rows)


StabilityKind = Literal["stable", "unstable"]


@dataclass(frozen=True)
class StabilityClass:
    kind: StabilityKind
    vertex: Optional[Point] = None

    def __post_init__(self) -> None:
        if (self.kind == "unstable") != (self.vertex is not None):
            raise ValueError("vertex is present exactly for unstable functions")

    @property
    def is_stable(self) -> bool:
        return self.kind == "stable"


def zero_set(line: Line, grid: GridSpec) -> int:
    """Bit-set of M(line) = lattice points with a*x + b*y + c <= 0."""
    mask = 0
    for i, (x, y) in enumerate(grid.points()):
        if line.eval2(x, y) <= 0:
            mask |= 1 << i
    return mask


def equivalent(l1: Line, l2: Line, grid: GridSpec) -> bool:
    """True iff the two lines define the same threshold function on the grid."""
    return zero_set(l1, grid) == zero_set(l2, grid)


def lattice_points_on(line: Line, grid: GridSpec) -> list[Point]:
    """Grid points lying exactly on the line, sorted lexicographically.

    Always empty for half-step lines (odd c2).
    """
    if line.c2 % 2 != 0:
        return []
    pts = [(x, y) for x, y in grid.points() if line.eval2(x, y) == 0]
    pts.sort()
    return pts


def complement_fn(f: ThresholdFn) -> ThresholdFn:
    """The point-reflected complement g(x, y) = 1 - f(m - x, n - y).

    An involution on threshold functions; used by the teaching-set size
    rule.
    """
    g = f.grid
    zeros = 0
    for y in range(g.n + 1):
        for x in range(g.m + 1):
            source = g.bit_index(g.m - x, g.n - y)
            if not (f.zeros >> source) & 1:
                zeros |= 1 << g.bit_index(x, y)
    return ThresholdFn(g, zeros)


def candidate_directions(grid: GridSpec) -> Iterator[tuple[int, int]]:
    """All primitive directions (dx, dy), |dx| <= 2m+1, |dy| <= 2n+1.

    Antipodal directions are both produced, which yields both orientations
    of every candidate line downstream.
    """
    bx, by = 2 * grid.m + 1, 2 * grid.n + 1
    for dx in range(-bx, bx + 1):
        for dy in range(-by, by + 1):
            if (dx, dy) != (0, 0) and math.gcd(abs(dx), abs(dy)) == 1:
                yield dx, dy


def candidate_lines(grid: GridSpec) -> Iterator[Line]:
    """The finite line family guaranteed to hit every threshold function.

    For each primitive direction: every offset passing exactly through a
    lattice point, plus the half-step offsets just to either side of each
    attained value.
    """
    pts = grid.points()
    for dx, dy in candidate_directions(grid):
        a, b = dy, -dx
        attained = sorted({a * x + b * y for x, y in pts})
        for v in attained:
            yield Line(a, b, -2 * v)
            yield Line(a, b, -2 * v - 1)
            yield Line(a, b, -2 * v + 1)


@dataclass(frozen=True)
class CandidateScan:
    """Digest of one pass over the candidate family of a grid.

    masks              every distinct zero bit-set realized
    stable_masks       masks defined by some candidate through >= 2 points
    pointed_singletons mask -> lattice points of its one-point defining lines
    """

    grid: GridSpec
    masks: frozenset[int]
    stable_masks: frozenset[int]
    pointed_singletons: dict[int, frozenset[Point]]


def scan_candidates(grid: GridSpec) -> CandidateScan:
    """Evaluate every candidate line, recording zero-sets and point counts.

    Vectorised per direction: all offsets of one direction are evaluated
    as a single boolean matrix and bit-packed.
    """
    pts = grid.points()
    xs = np.array([p[0] for p in pts], dtype=np.int64)
    ys = np.array([p[1] for p in pts], dtype=np.int64)
    masks: set[int] = set()
    stable: set[int] = set()
    singles: dict[int, set[Point]] = {}
    for dx, dy in candidate_directions(grid):
        a, b = dy, -dx
        vals = a * xs + b * ys
        order = np.argsort(vals, kind="stable")
        uniq, starts, counts = np.unique(vals[order], return_index=True, return_counts=True)
        c2s: list[int] = []
        on_counts: list[int] = []
        on_single: list[int] = []
        for v, start, c in zip(uniq.tolist(), starts.tolist(), counts.tolist()):
            c2s.extend((-2 * v, -2 * v - 1, -2 * v + 1))
            on_counts.extend((c, 0, 0))
            on_single.extend((int(order[start]) if c == 1 else -1, -1, -1))
        c2arr = np.array(c2s, dtype=np.int64)
        below = (2 * vals[None, :] + c2arr[:, None]) <= 0
        packed = np.packbits(below, axis=1, bitorder="little")
        for row in range(len(c2s)):
            key = int.from_bytes(packed[row].tobytes(), "little")
            masks.add(key)
            if on_counts[row] >= 2:
                stable.add(key)
            elif on_counts[row] == 1:
                singles.setdefault(key, set()).add(pts[on_single[row]])
    return CandidateScan(
        grid=grid,
        masks=frozenset(masks),
        stable_masks=frozenset(stable),
        pointed_singletons={k: frozenset(v) for k, v in singles.items()},
    )


def classify(
    f: ThresholdFn,
    universe: Optional[Sequence[ThresholdFn]] = None,
    scan: Optional[CandidateScan] = None,
) -> StabilityClass:
    """Stable/unstable classification of a non-constant threshold function.

    Stable iff some candidate line through at least two lattice points
    defines f.  Otherwise unstable, and the defining pointed candidates
    all pass through one point, the vertex.

    On a degenerate grid every non-constant function counts as stable: its
    zeros are an anchored run of the single lattice row or column, which
    is the limit of rotating the carrier line (through all the points)
    about the boundary point of the run, so the function is pinned by two
    lattice points in the limit sense the singular-line convention uses.

    ``universe``, when given, must contain f (membership is validated);
    ``scan`` may carry a precomputed candidate digest to avoid rescanning.
    """
    if f.is_constant:
        raise ValueError("constant functions have no stable/unstable classification")
    if universe is not None and not any(g.zeros == f.zeros for g in universe):
        raise ValueError("function is not a member of the supplied universe")
    if f.grid.is_degenerate:
        if not _is_anchored_run(f):
            raise ValueError("zeros are not an anchored run: not a threshold function")
        return StabilityClass("stable")
    if scan is None:
        scan = scan_candidates(f.grid)
    elif scan.grid != f.grid:
        raise ValueError("candidate scan belongs to a different grid")
    if f.zeros not in scan.masks:
        raise ValueError("function is not realized by the candidate family")
    if f.zeros in scan.stable_masks:
        return StabilityClass("stable")
    vertices = scan.pointed_singletons.get(f.zeros, frozenset())
    if len(vertices) != 1:
        raise AssertionError(
            f"unstable function should have a unique vertex, found {sorted(vertices)}"
        )
    return StabilityClass("unstable", vertex=next(iter(vertices)))


def _is_anchored_run(f: ThresholdFn) -> bool:
    """On a collinear grid, threshold zero-sets are runs touching an end."""
    count = f.grid.point_count
    bits = [(f.zeros >> i) & 1 for i in range(count)]
    ones = sum(bits)
    prefix = all(bits[i] == (1 if i < ones else 0) for i in range(count))
    suffix = all(bits[i] == (1 if i >= count - ones else 0) for i in range(count))
    return prefix or suffix
