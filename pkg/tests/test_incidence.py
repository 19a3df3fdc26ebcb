"""Point-line incidences, the explicit 4/4/1 bound, rich objects."""

from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from addcomb.core import canonical_line, line_through, point
from addcomb.errors import DegeneratePair, InvalidConfig
from addcomb.incidence import (
    Arrangement,
    line_intersection,
    line_moment_sums,
    line_stats,
    incidences,
    read_arrangement,
    rich_lines,
    rich_points,
    spanned_line_multiplicities,
    st_bound_check,
    write_arrangement,
)
from addcomb.sets import RatSet, SplitMix64


def _grid_arrangement(n: int, slopes) -> Arrangement:
    pts = [point(x, y) for x in range(n) for y in range(n)]
    lines = []
    for m in slopes:
        for c in range(-2 * n, 2 * n + 1):
            lines.append(canonical_line(m, -1, -c))  # y = m x + c
    return Arrangement.build(pts, lines)


def test_incidences_direct_recount():
    arr = _grid_arrangement(4, [0, 1, -1])
    direct = sum(1 for li in arr.lines for p in arr.points if li.contains(p))
    assert incidences(arr) == direct


def test_incidences_empty_cases():
    assert incidences(Arrangement.build([], [canonical_line(1, 0, 0)])) == 0
    assert incidences(Arrangement.build([point(0, 0)], [])) == 0


def test_arrangement_dedupes():
    arr = Arrangement.build([point(0, 0), point(0, 0)],
                            [canonical_line(2, 0, 0), canonical_line(1, 0, 0)])
    assert len(arr.points) == 1 and len(arr.lines) == 1


def test_st_bound_grid():
    arr = _grid_arrangement(5, [0, 1])
    rep = st_bound_check(arr)
    assert rep.ok
    assert rep.count == incidences(arr)
    assert rep.n_points == 25
    assert Fraction(rep.bound_lo) <= Fraction(rep.bound_hi)


@settings(max_examples=30)
@given(st.integers(0, 10**6))
def test_st_bound_random_arrangements(seed):
    rng = SplitMix64(seed)
    pts = [point(rng.below(30), rng.below(30)) for _ in range(1 + rng.below(60))]
    lines = []
    for _ in range(1 + rng.below(60)):
        a, b = rng.below(11) - 5, rng.below(11) - 5
        if a == 0 and b == 0:
            a = 1
        lines.append(canonical_line(a, b, rng.below(41) - 20))
    assert st_bound_check(Arrangement.build(pts, lines)).ok


def test_arrangement_file_roundtrip(tmp_path):
    arr = _grid_arrangement(3, [1])
    path = tmp_path / "arr.json"
    write_arrangement(path, arr)
    back = read_arrangement(path)
    assert back == arr


def test_spanned_line_multiplicities_square():
    # unit square: 4 side/diagonal... all 6 spanned lines, each by one pair
    pts = [point(0, 0), point(0, 1), point(1, 0), point(1, 1)]
    mult = spanned_line_multiplicities(pts)
    assert len(mult) == 6
    assert all(m == 2 for m in mult.values())


def test_spanned_line_multiplicities_collinear_run():
    pts = [point(i, i) for i in range(4)]
    mult = spanned_line_multiplicities(pts)
    assert mult == {canonical_line(1, -1, 0): 4}


def test_rich_lines_grid():
    pts = [point(x, y) for x in range(3) for y in range(3)]
    rich3 = rich_lines(pts, 3)
    # 3 rows + 3 columns + 2 long diagonals contain >= 3 grid points
    assert len(rich3) == 8
    for li in rich3:
        assert sum(1 for p in pts if li.contains(p)) >= 3
    with pytest.raises(InvalidConfig):
        rich_lines(pts, 1)


def test_line_intersection_cases():
    l1 = canonical_line(1, 0, 0)   # x = 0
    l2 = canonical_line(0, 1, 2)   # y = 2
    assert line_intersection(l1, l2) == point(0, 2)
    assert line_intersection(l1, l1) is None
    assert line_intersection(l1, canonical_line(1, 0, 5)) is None


def test_rich_points_pencil():
    # lines through the origin plus one horizontal: origin lies on many
    lines = [canonical_line(1, -m, 0) for m in range(5)] + [canonical_line(0, 1, 3)]
    rich = rich_points(lines, 5)
    assert point(0, 0) in rich
    for p in rich:
        assert sum(1 for li in lines if li.contains(p)) >= 5


def test_line_stats_shape_validation():
    a, b = RatSet([1, 2]), RatSet([1, 2, 3])
    with pytest.raises(InvalidConfig):
        line_stats(b, a, b)  # not sorted by size


def test_line_moment_sums_small_grid():
    a = RatSet([0, 1])
    rep = line_moment_sums(a, a, a, 1, "triple")
    assert rep.p == 1 and rep.family == "triple"
    assert len(rep.sums) == 3 and len(rep.ratios) == 3
    # alphas on the triple family are symmetric here: identical grids
    assert rep.sums[0] == rep.sums[1] == rep.sums[2]
    with pytest.raises(InvalidConfig):
        line_moment_sums(a, a, a, 4)
    with pytest.raises(InvalidConfig):
        line_moment_sums(a, a, a, 2, "stars")


def test_line_moment_sums_alpha_identity():
    # for identical 2x2 grids, every line of the triple family meets the
    # grid in alpha points shared across the three copies; p=1 sums the
    # alphas, p=3 the cubes, so p=3 >= p=1 termwise
    a = RatSet([0, 1, 2])
    s1 = line_moment_sums(a, a, a, 1).sums
    s3 = line_moment_sums(a, a, a, 3).sums
    assert all(x3 >= x1 for x1, x3 in zip(s1, s3))
