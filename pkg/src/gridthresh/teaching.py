"""Minimum teaching sets of threshold functions on small grids.

A teaching set of f is a set T of lattice points such that every other
threshold function of the grid disagrees with f somewhere on T; a minimum
teaching set is one of smallest cardinality.  For non-constant functions
the minimum size is 3 or 4, and which one is predicted by a stability
rule: size 3 if f is unstable, or if the point-reflected complement
g(x, y) = 1 - f(m - x, n - y) is unstable; size 4 when both are stable.

min_teaching_set verifies minimality exhaustively (sizes ascending,
subsets in lexicographic point order so witnesses are reproducible) and
the census compares every exhaustive answer against the rule, surfacing
disagreements instead of hiding them.  Constants fall outside the rule;
their sizes are still computed and reported.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence, Union

import numpy as np

from .geometry import (
    CandidateScan,
    Point,
    ThresholdFn,
    classify,
    complement_fn,
    scan_candidates,
)
from .grid import GridSpec
from .oracle import EnumerationResult, enumerate_by_lines

Universe = Union[EnumerationResult, Sequence[ThresholdFn]]


@dataclass(frozen=True)
class TeachingReport:
    """Exhaustive minimum teaching set of one function, plus the rule's say.

    predicted_size and rule_agrees are None for constant functions.
    """

    fn: ThresholdFn
    min_size: int
    witness: tuple[Point, ...]
    predicted_size: Optional[int]
    rule_agrees: Optional[bool]


@dataclass(frozen=True)
class CensusResult:
    """Teaching-size histogram of a grid with the per-function reports."""

    grid: GridSpec
    reports: list[TeachingReport]

    def histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for r in self.reports:
            hist[r.min_size] = hist.get(r.min_size, 0) + 1
        return dict(sorted(hist.items()))

    def mismatches(self) -> list[TeachingReport]:
        return [r for r in self.reports if r.rule_agrees is False]

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["grid_m", "grid_n", "min_size", "count"])
        for size, count in self.histogram().items():
            writer.writerow([self.grid.m, self.grid.n, size, count])
        return out.getvalue()


def _universe_parts(universe: Universe, grid: GridSpec) -> tuple[list[ThresholdFn], Optional[CandidateScan]]:
    if isinstance(universe, EnumerationResult):
        if universe.grid != grid:
            raise ValueError("universe was enumerated for a different grid")
        return universe.functions, universe.scan
    functions = list(universe)
    if not all(f.grid == grid for f in functions):
        raise ValueError("universe contains functions of a different grid")
    return functions, None


class _TeachingSearch:
    """Shared state for exhaustive teaching-set searches on one grid.

    Subset bit-masks per size are built once (lexicographic point order)
    and reused across functions; the per-function test is a vectorised
    "every difference mask hits the subset" check.
    """

    def __init__(self, grid: GridSpec, functions: list[ThresholdFn]):
        if grid.point_count > 64:
            raise ValueError("teaching-set search supports at most 64 lattice points")
        self.grid = grid
        self.functions = functions
        self.all_masks = np.array([f.zeros for f in functions], dtype=np.uint64)
        points = sorted(grid.points())  # lexicographic (x, y)
        self.points = points
        self.bits = [grid.bit_index(x, y) for x, y in points]
        self._combos: dict[int, tuple[list[tuple[int, ...]], np.ndarray]] = {}

    def _subsets(self, size: int) -> tuple[list[tuple[int, ...]], np.ndarray]:
        if size not in self._combos:
            combos = list(combinations(range(len(self.points)), size))
            masks = np.array(
                [sum(1 << self.bits[i] for i in combo) for combo in combos],
                dtype=np.uint64,
            )
            self._combos[size] = (combos, masks)
        return self._combos[size]

    def minimum(self, f: ThresholdFn) -> tuple[int, tuple[Point, ...]]:
        diffs = self.all_masks ^ np.uint64(f.zeros)
        diffs = diffs[diffs != 0]
        for size in range(1, len(self.points) + 1):
            combos, masks = self._subsets(size)
            hits = np.all(diffs[None, :] & masks[:, None], axis=1)
            first = int(np.argmax(hits))
            if hits[first]:
                witness = tuple(self.points[i] for i in combos[first])
                return size, witness
        raise AssertionError("the full lattice is always a teaching set")


def _predict(f: ThresholdFn, scan: Optional[CandidateScan]) -> int:
    if not classify(f, scan=scan).is_stable:
        return 3
    if not classify(complement_fn(f), scan=scan).is_stable:
        return 3
    return 4


def min_teaching_set(f: ThresholdFn, universe: Universe) -> TeachingReport:
    """Exhaustive minimum teaching set of f within the complete universe."""
    functions, scan = _universe_parts(universe, f.grid)
    if not any(g.zeros == f.zeros for g in functions):
        raise ValueError("function is not a member of the supplied universe")
    search = _TeachingSearch(f.grid, functions)
    return _report_for(f, search, scan)


def _report_for(f: ThresholdFn, search: _TeachingSearch,
                scan: Optional[CandidateScan]) -> TeachingReport:
    size, witness = search.minimum(f)
    if f.is_constant:
        return TeachingReport(f, size, witness, None, None)
    predicted = _predict(f, scan)
    return TeachingReport(f, size, witness, predicted, predicted == size)


def predict_size(f: ThresholdFn, universe: Universe) -> int:
    """The 3-or-4 rule: 3 iff f or its point-reflected complement is unstable."""
    if f.is_constant:
        raise ValueError("the size rule does not apply to constant functions")
    functions, scan = _universe_parts(universe, f.grid)
    if not any(g.zeros == f.zeros for g in functions):
        raise ValueError("function is not a member of the supplied universe")
    return _predict(f, scan)


def census(grid: GridSpec, universe: Optional[Universe] = None) -> CensusResult:
    """Teaching reports for every threshold function of the grid."""
    if universe is None:
        universe = enumerate_by_lines(grid)
    functions, scan = _universe_parts(universe, grid)
    if scan is None and not grid.is_degenerate:
        scan = scan_candidates(grid)
    search = _TeachingSearch(grid, functions)
    reports = [_report_for(f, search, scan) for f in functions]
    return CensusResult(grid=grid, reports=reports)
