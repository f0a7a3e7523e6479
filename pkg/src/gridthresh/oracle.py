"""Brute-force ground truth for every closed-form count.

Two independent enumerations of all threshold functions on a grid:

* enumerate_by_subsets walks every dichotomy of the lattice and keeps the
  separable ones, deciding separability by exact convex-hull disjointness
  (zeros on the closed side, ones strictly on the open side, which for
  compact hulls is equivalent to the hulls being disjoint).  It knows
  nothing about lines or the closed formulas.

* enumerate_by_lines evaluates the finite candidate-line family described
  in geometry and deduplicates the resulting zero-sets, classifying each
  function as stable or unstable along the way.

Function identity is extensional: zero bit-sets, deduplicated by hash.
The subset oracle is the arbiter wherever it can run; cross_validate
reports any disagreement between the oracles and the formulas with the
disputed bit-sets as witnesses.

Subset enumeration prunes with a necessary condition before the hull
test: a half-plane meets each grid row in an interval anchored at one end
(prefix for a > 0, suffix for a < 0), and the interval lengths, being
clamped floors of an affine function of the row index, are monotone
across rows.  The hull test alone decides membership for the survivors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Optional

import numpy as np

from .counting import breakdown
from .errors import CapacityError
from .geometry import CandidateScan, Point, ThresholdFn, scan_candidates
from .grid import GridSpec
from .numtheory import NTTables

SUBSET_POINT_CAP = 20
LINES_EXTENT_CAP = 15

Method = Literal["subsets", "lines"]


@dataclass(frozen=True, eq=False)
class EnumerationResult:
    """All threshold functions of one grid, with the F-class split.

    stable_count and unstable_count tally members of F only; the two
    constant functions are carried in constant_count.  vertices maps the
    zero bit-set of each unstable F-member to its vertex.
    """

    grid: GridSpec
    functions: list[ThresholdFn]
    stable_count: int
    unstable_count: int
    method: Method
    vertices: dict[int, Point]
    scan: Optional[CandidateScan] = field(default=None, repr=False)

    @property
    def constant_count(self) -> int:
        return 2

    @property
    def masks(self) -> frozenset[int]:
        return frozenset(f.zeros for f in self.functions)

    def __len__(self) -> int:
        return len(self.functions)


# ---------------------------------------------------------------------------
# exact hull predicates (integer arithmetic only)


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _hull(points: list[Point]) -> list[Point]:
    """Convex hull, CCW, collinear interior points dropped.

    Degenerate inputs come back as themselves: a single point or the two
    endpoints of a collinear set.
    """
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _point_in_hull(p: Point, hull: list[Point]) -> bool:
    if len(hull) == 1:
        return p == hull[0]
    if len(hull) == 2:
        a, b = hull
        if _cross(a, b, p) != 0:
            return False
        return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
                and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))
    for i in range(len(hull)):
        if _cross(hull[i], hull[(i + 1) % len(hull)], p) < 0:
            return False
    return True


def _on_segment(a: Point, b: Point, c: Point) -> bool:
    return (_cross(a, b, c) == 0
            and min(a[0], b[0]) <= c[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= c[1] <= max(a[1], b[1]))


def _segments_intersect(p1: Point, p2: Point, p3: Point, p4: Point) -> bool:
    d1 = _cross(p3, p4, p1)
    d2 = _cross(p3, p4, p2)
    d3 = _cross(p1, p2, p3)
    d4 = _cross(p1, p2, p4)
    if ((d1 > 0) != (d2 > 0) and d1 != 0 and d2 != 0
            and (d3 > 0) != (d4 > 0) and d3 != 0 and d4 != 0):
        return True
    return (_on_segment(p3, p4, p1) or _on_segment(p3, p4, p2)
            or _on_segment(p1, p2, p3) or _on_segment(p1, p2, p4))


def hulls_disjoint(points_a: list[Point], points_b: list[Point]) -> bool:
    """Exact disjointness of the convex hulls of two point sets.

    Two convex regions intersect iff a vertex of one lies in the other or
    a pair of boundary edges meets; both checks are closed, so touching
    counts as intersecting.
    """
    ha, hb = _hull(points_a), _hull(points_b)
    for p in ha:
        if _point_in_hull(p, hb):
            return False
    for p in hb:
        if _point_in_hull(p, ha):
            return False
    edges_a = _edges(ha)
    edges_b = _edges(hb)
    for a1, a2 in edges_a:
        for b1, b2 in edges_b:
            if _segments_intersect(a1, a2, b1, b2):
                return False
    return True


def _edges(hull: list[Point]) -> list[tuple[Point, Point]]:
    if len(hull) < 2:
        return []
    if len(hull) == 2:
        return [(hull[0], hull[1])]
    return [(hull[i], hull[(i + 1) % len(hull)]) for i in range(len(hull))]


def is_separable(zeros: list[Point], ones: list[Point]) -> bool:
    """Can some line put ``zeros`` on its closed side and ``ones`` strictly
    on the open side?  Empty sides are trivially separable."""
    if not zeros or not ones:
        return True
    return hulls_disjoint(zeros, ones)


# ---------------------------------------------------------------------------
# subset enumeration


def _anchored_pattern_tables(width: int) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Validity and length lookup tables for prefix/suffix row patterns."""
    size = 1 << width
    prefix_ok = np.zeros(size, dtype=bool)
    suffix_ok = np.zeros(size, dtype=bool)
    prefix_len = np.zeros(size, dtype=np.int8)
    suffix_len = np.zeros(size, dtype=np.int8)
    for length in range(width + 1):
        pm = (1 << length) - 1
        sm = pm << (width - length)
        prefix_ok[pm] = True
        prefix_len[pm] = length
        suffix_ok[sm] = True
        suffix_len[sm] = length
    return prefix_ok, prefix_len, suffix_ok, suffix_len


def _separable_candidates(grid: GridSpec) -> np.ndarray:
    """Bit-sets passing the anchored-row/monotone-length necessary filter."""
    width = grid.m + 1
    rows_n = grid.n + 1
    total_bits = grid.point_count
    masks = np.arange(1 << total_bits, dtype=np.int64)
    row_mask = (1 << width) - 1
    prefix_ok, prefix_len, suffix_ok, suffix_len = _anchored_pattern_tables(width)
    rows = [(masks >> (r * width)) & row_mask for r in range(rows_n)]
    all_prefix = np.ones(masks.shape, dtype=bool)
    all_suffix = np.ones(masks.shape, dtype=bool)
    for r in rows:
        all_prefix &= prefix_ok[r]
        all_suffix &= suffix_ok[r]

    def monotone(lengths: list[np.ndarray]) -> np.ndarray:
        rising = np.ones(masks.shape, dtype=bool)
        falling = np.ones(masks.shape, dtype=bool)
        for i in range(len(lengths) - 1):
            rising &= lengths[i] <= lengths[i + 1]
            falling &= lengths[i] >= lengths[i + 1]
        return rising | falling

    keep = (all_prefix & monotone([prefix_len[r] for r in rows])) | (
        all_suffix & monotone([suffix_len[r] for r in rows])
    )
    return masks[keep]


def enumerate_by_subsets(grid: GridSpec, point_cap: int = SUBSET_POINT_CAP) -> EnumerationResult:
    """Every subset of the lattice, kept iff it is a separable zero-set.

    Ground truth by definition; capacity-limited to 2^point_cap subsets.
    The stable/unstable tallies are attached afterwards from a candidate
    scan (classification is a statement about lines); a subset function
    the candidate family misses would be a family gap and raises.
    """
    if grid.point_count > point_cap:
        raise CapacityError(
            f"grid ({grid.m}, {grid.n}) has {grid.point_count} points; "
            f"subset enumeration is capped at {point_cap}"
        )
    pts = grid.points()
    total_bits = grid.point_count
    full = (1 << total_bits) - 1
    kept: list[int] = []
    for mask in _separable_candidates(grid).tolist():
        if mask == 0 or mask == full:
            kept.append(mask)
            continue
        zeros = [pts[i] for i in range(total_bits) if (mask >> i) & 1]
        ones = [pts[i] for i in range(total_bits) if not (mask >> i) & 1]
        if is_separable(zeros, ones):
            kept.append(mask)
    kept.sort()
    functions = [ThresholdFn(grid, mask) for mask in kept]
    stable, unstable, vertices, scan = _classify_f_members(grid, kept)
    return EnumerationResult(
        grid=grid,
        functions=functions,
        stable_count=stable,
        unstable_count=unstable,
        method="subsets",
        vertices=vertices,
        scan=scan,
    )


def _classify_f_members(
    grid: GridSpec, masks: list[int], scan: Optional[CandidateScan] = None
) -> tuple[int, int, dict[int, Point], Optional[CandidateScan]]:
    full = (1 << grid.point_count) - 1
    f_masks = [m for m in masks if (m & 1) and m != full]
    if grid.is_degenerate:
        # anchored runs on a collinear grid: stable by the limit-rotation
        # convention (see geometry.classify)
        return len(f_masks), 0, {}, scan
    if scan is None:
        scan = scan_candidates(grid)
    stable = unstable = 0
    vertices: dict[int, Point] = {}
    for m in f_masks:
        if m not in scan.masks:
            raise AssertionError(
                f"candidate family missed a separable zero-set on grid "
                f"({grid.m}, {grid.n}): {m:b}"
            )
        if m in scan.stable_masks:
            stable += 1
        else:
            points = scan.pointed_singletons.get(m, frozenset())
            if len(points) != 1:
                raise AssertionError(f"unstable mask {m:b} lacks a unique vertex")
            unstable += 1
            vertices[m] = next(iter(points))
    return stable, unstable, vertices, scan


def enumerate_by_lines(grid: GridSpec, extent_cap: int = LINES_EXTENT_CAP) -> EnumerationResult:
    """Every function realized by the candidate-line family, classified."""
    if max(grid.m, grid.n) > extent_cap:
        raise CapacityError(
            f"grid ({grid.m}, {grid.n}) exceeds the line-enumeration cap of {extent_cap}"
        )
    scan = scan_candidates(grid)
    kept = sorted(scan.masks)
    functions = [ThresholdFn(grid, mask) for mask in kept]
    stable, unstable, vertices, scan = _classify_f_members(grid, kept, scan)
    return EnumerationResult(
        grid=grid,
        functions=functions,
        stable_count=stable,
        unstable_count=unstable,
        method="lines",
        vertices=vertices,
        scan=scan,
    )


# ---------------------------------------------------------------------------
# cross validation


@dataclass(frozen=True)
class CrossValidationReport:
    """Formula counts against oracle counts, with mismatch witnesses."""

    grid: GridSpec
    formula_total: int
    formula_stable: int
    formula_unstable: int
    provenance: str
    subset_total: Optional[int]
    lines_total: Optional[int]
    oracle_stable: Optional[int]
    oracle_unstable: Optional[int]
    total_matches: bool
    split_matches: bool
    oracles_agree: bool
    witnesses: list[str]

    @property
    def all_match(self) -> bool:
        return self.total_matches and self.split_matches and self.oracles_agree


def cross_validate(grid: GridSpec, tables: NTTables,
                   point_cap: int = SUBSET_POINT_CAP,
                   extent_cap: int = LINES_EXTENT_CAP) -> CrossValidationReport:
    """Run whichever oracles fit the grid and compare them to the formulas.

    Mismatches are report content, not errors; each carries the disputed
    bit-sets as witnesses.
    """
    subsets = lines = None
    if grid.point_count <= point_cap:
        subsets = enumerate_by_subsets(grid, point_cap)
    if max(grid.m, grid.n) <= extent_cap:
        lines = enumerate_by_lines(grid, extent_cap)
    if subsets is None and lines is None:
        raise CapacityError(f"grid ({grid.m}, {grid.n}) is beyond both oracle ranges")

    counts = breakdown(grid, tables)
    witnesses: list[str] = []

    oracles_agree = True
    if subsets is not None and lines is not None:
        diff = subsets.masks.symmetric_difference(lines.masks)
        if diff:
            oracles_agree = False
            witnesses += [_witness(grid, m, "oracle disagreement") for m in sorted(diff)[:8]]

    primary = subsets if subsets is not None else lines
    assert primary is not None
    total_matches = len(primary) == counts.total
    if subsets is not None and lines is not None:
        total_matches = total_matches and len(lines) == counts.total
    if not total_matches:
        witnesses.append(
            f"count mismatch: formula {counts.total}, oracle {len(primary)}"
        )

    oracle_stable = primary.stable_count
    oracle_unstable = primary.unstable_count
    split_matches = (oracle_stable == counts.stable and oracle_unstable == counts.unstable)
    if not split_matches:
        witnesses.append(
            f"split mismatch: formula {counts.stable}/{counts.unstable}, "
            f"oracle {oracle_stable}/{oracle_unstable}"
        )

    return CrossValidationReport(
        grid=grid,
        formula_total=counts.total,
        formula_stable=counts.stable,
        formula_unstable=counts.unstable,
        provenance=counts.provenance,
        subset_total=len(subsets) if subsets is not None else None,
        lines_total=len(lines) if lines is not None else None,
        oracle_stable=oracle_stable,
        oracle_unstable=oracle_unstable,
        total_matches=total_matches,
        split_matches=split_matches,
        oracles_agree=oracles_agree,
        witnesses=witnesses,
    )


def _witness(grid: GridSpec, mask: int, label: str) -> str:
    bits = "".join("1" if (mask >> i) & 1 else "0" for i in range(grid.point_count))
    return f"{label}: zeros={bits}"


def dump_functions(result: EnumerationResult, path: str) -> None:
    """Write one bit-string per function (row-major zeros, bit 0 first)."""
    with open(path, "w", encoding="ascii") as fh:
        for fn in result.functions:
            bits = "".join(
                "1" if (fn.zeros >> i) & 1 else "0" for i in range(result.grid.point_count)
            )
            fh.write(bits + "\n")
