"""Closed-form counts of two-dimensional threshold functions.

For the grid [0, m] x [0, n] the total count is

    N(m, n) = (2m + 1)(2n + 1) + 1 + 4 V(m, n),

and within the class F (functions with f(0,0) = 0, excluding the constant
zero) the stable/unstable split is

    unstable(m, n) = 2mn - U(m, n) + 8 V((m-1)/2, (n-1)/2)
    stable(m, n)   = m + n + U(m, n) + 2 V(m, n) - 8 V((m-1)/2, (n-1)/2)

with N = 2(|F| + 1).  The k-valued square case is P(k, 2) = N(k-1, k-1).

All counts are exact Python integers; V flows through the quadrupled
integer representation so the 2V/4V/8V consumers never see a rational.

The split formulas are derived for proper rectangles (m, n >= 1).  On
degenerate grids the breakdown is computed from the geometric argument
instead (every non-constant function on a collinear grid is an anchored
run, stable under the limit-rotation convention; see geometry.classify),
and the breakdown records that provenance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .grid import GridSpec
from .numtheory import HalfInt, NTTables, u_mobius, v_fast


@dataclass(frozen=True)
class CountBreakdown:
    """Exact counts for one grid.

    provenance records whether the stable/unstable split came from the
    rectangle formulas ("formula") or from the degenerate-grid geometric
    argument ("geometric").
    """

    grid: GridSpec
    stable: int
    unstable: int
    f_class: int
    total: int
    provenance: Literal["formula", "geometric"]

    def __post_init__(self) -> None:
        if self.f_class != self.stable + self.unstable:
            raise ValueError("|F| must equal stable + unstable")
        if self.total != 2 * (self.f_class + 1):
            raise ValueError("total must equal 2(|F| + 1)")


def _require_tables(grid: GridSpec, tables: NTTables) -> None:
    need = max(1, min(grid.m, grid.n))
    if tables.limit < need:
        raise ValueError(f"sieve limit {tables.limit} < min(m, n) = {need}")


def count_total(grid: GridSpec, tables: NTTables) -> int:
    """N(m, n), exact; symmetric in m and n."""
    _require_tables(grid, tables)
    four_v = v_fast(grid.m, grid.n, tables).quadrupled
    return (2 * grid.m + 1) * (2 * grid.n + 1) + 1 + four_v


def count_p(k: int, tables: NTTables) -> int:
    """P(k, 2) = N(k-1, k-1): threshold functions of k-valued two-input logic."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return count_total(GridSpec(k - 1, k - 1), tables)


def _eight_v_half(grid: GridSpec, tables: NTTables) -> int:
    """8 V((m-1)/2, (n-1)/2) as an exact integer."""
    quad = v_fast(HalfInt(grid.m - 1), HalfInt(grid.n - 1), tables).quadrupled
    return 2 * quad


def count_unstable(grid: GridSpec, tables: NTTables) -> int:
    """Unstable functions in F; geometric value (0) on degenerate grids."""
    _require_tables(grid, tables)
    if grid.is_degenerate:
        return 0
    u = u_mobius(grid.m, grid.n, tables)
    return 2 * grid.m * grid.n - u + _eight_v_half(grid, tables)


def count_stable(grid: GridSpec, tables: NTTables) -> int:
    """Stable functions in F; geometric value (m + n) on degenerate grids."""
    _require_tables(grid, tables)
    if grid.is_degenerate:
        return grid.m + grid.n
    u = u_mobius(grid.m, grid.n, tables)
    four_v = v_fast(grid.m, grid.n, tables).quadrupled
    assert four_v % 2 == 0, "2V(m, n) must be an integer"
    return grid.m + grid.n + u + four_v // 2 - _eight_v_half(grid, tables)


def breakdown(grid: GridSpec, tables: NTTables) -> CountBreakdown:
    """Stable/unstable/|F|/total for one grid, with provenance."""
    total = count_total(grid, tables)
    stable = count_stable(grid, tables)
    unstable = count_unstable(grid, tables)
    return CountBreakdown(
        grid=grid,
        stable=stable,
        unstable=unstable,
        f_class=stable + unstable,
        total=total,
        provenance="geometric" if grid.is_degenerate else "formula",
    )
