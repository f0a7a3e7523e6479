"""Unit tests for the brute-force enumerations and cross-validation."""

import pytest

from gridthresh import (
    CapacityError,
    GridSpec,
    complement_fn,
    cross_validate,
    dump_functions,
    enumerate_by_lines,
    enumerate_by_subsets,
    sieve,
)
from gridthresh.oracle import (
    _hull,
    _point_in_hull,
    _segments_intersect,
    hulls_disjoint,
    is_separable,
)

TABLES = sieve(64)


# -- exact hull predicates ----------------------------------------------------

def test_hull_of_collinear_points_is_segment():
    assert _hull([(0, 0), (1, 1), (2, 2), (3, 3)]) == [(0, 0), (3, 3)]


def test_hull_drops_interior_points():
    square = [(0, 0), (2, 0), (2, 2), (0, 2), (1, 1)]
    assert sorted(_hull(square)) == [(0, 0), (0, 2), (2, 0), (2, 2)]


def test_point_in_hull_boundary_counts():
    hull = _hull([(0, 0), (4, 0), (4, 4), (0, 4)])
    assert _point_in_hull((2, 0), hull)
    assert _point_in_hull((2, 2), hull)
    assert not _point_in_hull((5, 2), hull)


def test_segments_collinear_overlap():
    assert _segments_intersect((0, 0), (3, 0), (2, 0), (5, 0))
    assert not _segments_intersect((0, 0), (1, 0), (2, 0), (3, 0))


def test_disjoint_collinear_segments():
    # the case plain edge-normal separation misses: all points on one line
    assert hulls_disjoint([(0, 0), (1, 0)], [(3, 0)])
    assert not hulls_disjoint([(0, 0), (2, 0)], [(1, 0)])


def test_touching_hulls_are_not_disjoint():
    assert not hulls_disjoint([(0, 0), (2, 0), (1, 2)], [(1, 2), (3, 3)])


def test_diagonal_dichotomy_is_not_separable():
    assert not is_separable([(0, 0), (1, 1)], [(0, 1), (1, 0)])
    assert is_separable([(0, 0), (0, 1)], [(1, 0), (1, 1)])
    assert is_separable([], [(0, 0)])


# -- subset enumeration -------------------------------------------------------

def test_subsets_two_collinear_points():
    result = enumerate_by_subsets(GridSpec(1, 0))
    assert len(result) == 4   # every dichotomy of two points separates


def test_subsets_2x2_grid_excludes_diagonals():
    grid = GridSpec(1, 1)
    result = enumerate_by_subsets(grid)
    assert len(result) == 14
    diag1 = (1 << grid.bit_index(0, 0)) | (1 << grid.bit_index(1, 1))
    diag2 = (1 << grid.bit_index(1, 0)) | (1 << grid.bit_index(0, 1))
    assert result.masks == frozenset(range(16)) - {diag1, diag2}


def test_subsets_3x3_grid():
    result = enumerate_by_subsets(GridSpec(2, 2))
    assert len(result) == 58
    assert result.stable_count == 21
    assert result.unstable_count == 7


def test_subsets_capacity_error():
    with pytest.raises(CapacityError):
        enumerate_by_subsets(GridSpec(10, 10))


def test_constants_always_enumerated():
    for spec in [(0, 0), (1, 0), (2, 3)]:
        grid = GridSpec(*spec)
        masks = enumerate_by_subsets(grid).masks
        assert 0 in masks
        assert (1 << grid.point_count) - 1 in masks


# -- line enumeration ---------------------------------------------------------

def test_lines_2x2_grid_breakdown():
    result = enumerate_by_lines(GridSpec(1, 1))
    assert len(result) == 14
    assert result.stable_count == 5
    assert result.unstable_count == 1
    assert result.vertices == {1: (0, 0)}   # zeros only at the origin


def test_lines_3x3_grid_breakdown():
    result = enumerate_by_lines(GridSpec(2, 2))
    assert len(result) == 58
    assert result.unstable_count == 7


def test_lines_single_point_grid():
    assert len(enumerate_by_lines(GridSpec(0, 0))) == 2


def test_lines_capacity_error():
    with pytest.raises(CapacityError):
        enumerate_by_lines(GridSpec(16, 2))


def test_lines_at_the_extent_cap_matches_formula():
    from gridthresh import breakdown

    grid = GridSpec(15, 15)
    enum = enumerate_by_lines(grid)
    b = breakdown(grid, TABLES)
    assert len(enum) == b.total == 40150
    assert (enum.stable_count, enum.unstable_count) == (b.stable, b.unstable)


def test_oracles_agree_on_function_sets():
    for spec in [(0, 0), (1, 0), (0, 4), (1, 1), (2, 2), (2, 3), (3, 3), (1, 8)]:
        grid = GridSpec(*spec)
        assert enumerate_by_subsets(grid).masks == enumerate_by_lines(grid).masks, spec


def test_function_set_closed_under_complements():
    for spec in [(2, 2), (2, 3)]:
        grid = GridSpec(*spec)
        result = enumerate_by_lines(grid)
        masks = result.masks
        full = (1 << grid.point_count) - 1
        for f in result.functions:
            assert f.zeros ^ full in masks            # global flip 1 - f(x, y)
            assert complement_fn(f).zeros in masks    # point-reflected complement


def test_flip_bijection_between_f_class_and_its_mirror():
    grid = GridSpec(3, 2)
    result = enumerate_by_lines(grid)
    full = (1 << grid.point_count) - 1
    in_f = {f.zeros for f in result.functions if f.in_f_class}
    mirrored = {m ^ full for m in in_f}
    outside = {f.zeros for f in result.functions} - in_f - {0, full}
    # f -> 1 - f is a bijection between F and the non-constant functions
    # with f(0,0) = 1, which underpins N = 2(|F| + 1)
    assert mirrored == outside


# -- cross validation ---------------------------------------------------------

def test_cross_validate_small_grids_match():
    for spec in [(1, 1), (2, 3), (0, 5)]:
        report = cross_validate(GridSpec(*spec), TABLES)
        assert report.all_match, spec
        assert report.witnesses == []


def test_cross_validate_total_value():
    report = cross_validate(GridSpec(2, 3), TABLES)
    assert report.formula_total == 100
    assert report.subset_total == 100
    assert report.lines_total == 100


def test_cross_validate_degenerate_uses_geometric_path():
    report = cross_validate(GridSpec(0, 5), TABLES)
    assert report.provenance == "geometric"
    assert report.all_match


def test_cross_validate_beyond_both_ranges():
    with pytest.raises(CapacityError):
        cross_validate(GridSpec(16, 16), TABLES)


# -- dump ----------------------------------------------------------------------

def test_dump_functions_round_trip(tmp_path):
    grid = GridSpec(1, 1)
    result = enumerate_by_lines(grid)
    path = tmp_path / "functions.txt"
    dump_functions(result, str(path))
    lines = path.read_text().splitlines()
    assert len(lines) == 14
    assert all(len(line) == grid.point_count for line in lines)
    parsed = {int(line[::-1], 2) for line in lines}
    assert parsed == result.masks
