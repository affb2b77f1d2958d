"""Grid geometry: edges, lines, paths, segments, bend shapes, file format."""

from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from epgt.lattice import (
    Direction,
    GridLine,
    GridPoint,
    LatticePath,
    NotAdjacentError,
    NotOneBendError,
    PathFormatError,
    all_bend_shapes,
    edge_between,
    format_paths,
    line_intersection,
    parse_paths,
    path,
)


def test_edge_between_horizontal():
    e = edge_between((2, 3), (3, 3))
    assert e.direction is Direction.HORIZONTAL
    assert (e.a, e.b) == (GridPoint(2, 3), GridPoint(3, 3))


def test_edge_between_diagonal():
    e = edge_between((2, 2), (3, 3))
    assert e.direction is Direction.DIAGONAL


def test_edge_between_rejects_antidiagonal():
    with pytest.raises(NotAdjacentError):
        edge_between((0, 0), (1, -1))


def test_edge_between_rejects_far_points():
    with pytest.raises(NotAdjacentError):
        edge_between((0, 0), (2, 0))


def test_edge_canonical_order():
    assert edge_between((3, 3), (2, 3)) == edge_between((2, 3), (3, 3))


def test_line_intersection_point():
    h = GridLine(Direction.HORIZONTAL, 3)
    v = GridLine(Direction.VERTICAL, 2)
    assert line_intersection(h, v) == GridPoint(2, 3)


def test_line_intersection_parallel_empty():
    h1 = GridLine(Direction.HORIZONTAL, 1)
    h2 = GridLine(Direction.HORIZONTAL, 2)
    assert line_intersection(h1, h2) is None


def test_line_intersection_same():
    d = GridLine(Direction.DIAGONAL, 0)
    assert line_intersection(d, d) == d


def test_line_intersection_diagonal_vertical():
    d = GridLine(Direction.DIAGONAL, 0)
    v = GridLine(Direction.VERTICAL, 5)
    assert line_intersection(d, v) == GridPoint(5, 5)


def test_lines_through_point_pairwise_meet_there():
    p = GridPoint(4, 7)
    lines = [GridLine.through(p, d) for d in Direction]
    for i in range(3):
        for j in range(i + 1, 3):
            assert line_intersection(lines[i], lines[j]) == p


def test_segments_of_bent_path():
    p = path((1, 3), (2, 3), (3, 3), (2, 2))
    segs = p.segments
    assert len(segs) == 2
    assert segs[0].direction is Direction.HORIZONTAL
    assert (segs[0].a, segs[0].b) == (GridPoint(1, 3), GridPoint(3, 3))
    assert segs[1].direction is Direction.DIAGONAL


def test_segments_of_straight_path():
    p = path((0, 0), (1, 0))
    assert len(p.segments) == 1
    assert p.bend_count == 0


def test_segments_v_then_d():
    p = path((1, 2), (1, 1), (2, 2))
    assert [s.direction for s in p.segments] == [
        Direction.VERTICAL,
        Direction.DIAGONAL,
    ]
    assert p.bend_count == 1


def test_bend_counts():
    assert path((1, 3), (2, 3), (3, 3)).bend_count == 0
    assert path((1, 3), (2, 3), (3, 3), (2, 2)).bend_count == 1
    assert path((0, 0), (1, 0), (1, 1), (2, 2)).bend_count == 2


def test_is_bk():
    p = path((0, 0), (1, 0), (1, 1), (2, 2))
    assert not p.is_bk(1)
    assert p.is_bk(2)


def test_bend_shape_normal():
    p = path((0, 1), (1, 1), (1, 2))
    s = p.bend_shape()
    assert s.arms == frozenset({(-1, 0), (0, 1)})
    assert s.angle_class == "normal"


def test_bend_shape_wide():
    assert path((0, 0), (1, 0), (2, 1)).bend_shape().angle_class == "wide"


def test_bend_shape_narrow():
    assert path((1, 2), (1, 1), (2, 2)).bend_shape().angle_class == "narrow"


def test_bend_shape_requires_one_bend():
    with pytest.raises(NotOneBendError):
        path((0, 0), (1, 0)).bend_shape()


def test_twelve_bend_shapes_split_by_angle():
    shapes = all_bend_shapes()
    assert len(shapes) == 12
    from epgt.lattice import BendShape

    classes = [BendShape(GridPoint(0, 0), arms).angle_class for arms in shapes]
    assert classes.count("narrow") == 4
    assert classes.count("normal") == 4
    assert classes.count("wide") == 4


def test_path_rejects_revisit():
    with pytest.raises(ValueError):
        path((0, 0), (1, 0), (0, 0))


def test_path_rejects_single_vertex():
    with pytest.raises(ValueError):
        path((0, 0))


def test_segment_count_is_bends_plus_one_and_directions_alternate():
    for pts in [
        ((0, 0), (1, 0), (1, 1)),
        ((0, 0), (1, 1), (2, 2), (2, 1), (2, 0)),
        ((5, 5), (4, 4), (3, 3)),
    ]:
        p = path(*pts)
        segs = p.segments
        assert len(segs) == p.bend_count + 1
        for s1, s2 in zip(segs, segs[1:]):
            assert s1.direction != s2.direction


# random walks on the grid, rejecting self-intersections
@st.composite
def lattice_paths(draw):
    from epgt.lattice import UNIT_RAYS

    start = (draw(st.integers(-5, 5)), draw(st.integers(-5, 5)))
    pts = [GridPoint(*start)]
    n = draw(st.integers(1, 9))
    for _ in range(n):
        ray = draw(st.sampled_from(UNIT_RAYS))
        nxt = pts[-1].translated(*ray)
        if nxt in pts:
            continue
        pts.append(nxt)
    if len(pts) < 2:
        pts.append(pts[-1].translated(1, 0))
    return LatticePath(tuple(pts))


@given(lattice_paths())
def test_canonicalization_fixed_point_and_reversal(p):
    again = LatticePath(p.vertices)
    assert again == p
    reversed_path = LatticePath(tuple(reversed(p.vertices)))
    assert reversed_path == p


@given(lattice_paths())
def test_translate_roundtrip(p):
    assert p.translated(3, -2).translated(-3, 2) == p


@given(lattice_paths())
def test_double_flip_involution(p):
    assert p.double_flipped().double_flipped() == p


def test_path_file_roundtrip():
    paths = [path((0, 0), (1, 0), (1, 1)), path((2, 2), (3, 3))]
    text = format_paths(paths, ["7", "x"])
    parsed = parse_paths(text)
    assert [(i, p) for i, p in parsed] == [("7", paths[0]), ("x", paths[1])]


def test_parse_rejects_nonadjacent_with_line_number():
    with pytest.raises(PathFormatError) as err:
        parse_paths("P0: (0,0) (1,0)\nP1: (0,0) (2,0)\n")
    assert err.value.line_no == 2


def test_parse_rejects_garbage():
    with pytest.raises(PathFormatError):
        parse_paths("nonsense\n")
    with pytest.raises(PathFormatError):
        parse_paths("P0: (0,0) (1,0) junk\n")


def test_parse_skips_comments_and_blanks():
    parsed = parse_paths("# comment\n\nP0: (0,0) (1,1)\n")
    assert len(parsed) == 1
