"""Stable and unstable threshold functions.

A function is stable when some defining line passes through two lattice
points (the line is pinned); otherwise every defining line pivots about a
single lattice point, the vertex.  The split obeys exact formulas:

    unstable(m, n) = 2mn - U(m, n) + 8 V((m-1)/2, (n-1)/2)
    stable(m, n)   = m + n + U(m, n) + 2 V(m, n) - 8 V((m-1)/2, (n-1)/2)

where the V arguments become half-integers whenever m or n is even; the
doubled/quadrupled integer representation keeps it all exact.
"""

from gridthresh import (
    GridSpec,
    ThresholdFn,
    breakdown,
    classify,
    enumerate_by_lines,
    sieve,
)

tables = sieve(64)

# the canonical unstable example: zeros only at the origin
grid = GridSpec(1, 1)
singleton = ThresholdFn(grid, 1)
result = classify(singleton)
print("zeros only at (0,0) on the 2 x 2 lattice:", result.kind,
      "with vertex", result.vertex)

# its column-shaped neighbour is stable (pinned by a vertical line)
column = ThresholdFn(grid, 1 | (1 << grid.bit_index(0, 1)))
print("zeros on the left column:", classify(column).kind)

print("\nFormula split vs exhaustive classification:")
for spec in [(1, 1), (2, 2), (3, 3), (4, 4), (5, 5)]:
    g = GridSpec(*spec)
    b = breakdown(g, tables)
    enum = enumerate_by_lines(g)
    print(f"  grid {spec}: formula {b.stable}/{b.unstable}  "
          f"oracle {enum.stable_count}/{enum.unstable_count}")

# vertices of all unstable functions on the 3 x 3 lattice
enum = enumerate_by_lines(GridSpec(2, 2))
print(f"\nThe {enum.unstable_count} unstable functions of the 3 x 3 lattice "
      f"and their vertices:")
for mask, vertex in sorted(enum.vertices.items()):
    fn = ThresholdFn(GridSpec(2, 2), mask)
    rows = fn.render().split("\n")
    print(f"  vertex {vertex}:  " + "  ".join(rows))
