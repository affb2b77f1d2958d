"""Line two-coloring, triple assembly, recoloring, end-to-end verification."""

from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from epgt.coloring import (
    ColorTriple,
    NotB1FamilyError,
    TRIPLE_INDEX,
    _two_color_intervals,
    clique_color,
    initial_colors,
    monocolored_regular_claws_at,
    recolor_at,
    two_clique_color_line,
    verify_clique_coloring,
)
from epgt.constructions import (
    GALLERY_CLIQUE_NAMES,
    GALLERY_CYCLE_NAMES,
    claw_witness,
    gallery,
    random_b1_family,
    sun_representation,
)
from epgt.intersect import Representation
from epgt.lattice import GridPoint, Segment, path


def _mono_claw_rep() -> Representation:
    """Phase one leaves P1, P2, P3 (indices 3..5) all colored (a,a,b)."""
    return Representation((
        path((2, 0), (2, 1), (2, 2)),
        path((0, 1), (1, 1), (2, 1)),
        path((2, 1), (3, 1)),
        path((1, 1), (2, 1), (2, 2)),
        path((2, 2), (2, 1), (3, 1)),
        path((0, 1), (1, 1), (2, 1), (3, 1), (4, 1), (4, 2)),
    ))


intervals_strategy = st.lists(
    st.tuples(st.integers(0, 8), st.integers(1, 6)).map(lambda t: (t[0], t[0] + t[1])),
    min_size=1,
    max_size=8,
)


def _brute_maximal_overlap_cliques(intervals):
    n = len(intervals)

    def overlaps(i, j):
        return min(intervals[i][1], intervals[j][1]) > max(
            intervals[i][0], intervals[j][0]
        )

    cliques = []
    for r in range(2, n + 1):
        for sub in combinations(range(n), r):
            if all(overlaps(i, j) for i, j in combinations(sub, 2)):
                cliques.append(set(sub))
    return [c for c in cliques if not any(c < d for d in cliques)]


@given(intervals_strategy)
@settings(max_examples=200, deadline=None)
def test_interval_two_coloring_postconditions(intervals):
    colors = _two_color_intervals(intervals)
    assert len(colors) == len(intervals)
    b_class = [i for i, c in enumerate(colors) if c == "b"]
    for i, j in combinations(b_class, 2):
        assert min(intervals[i][1], intervals[j][1]) <= max(
            intervals[i][0], intervals[j][0]
        ), "b segments must not share a unit edge"
    for clique in _brute_maximal_overlap_cliques(intervals):
        assert any(colors[i] == "b" for i in clique)


@given(intervals_strategy)
@settings(max_examples=50, deadline=None)
def test_interval_two_coloring_deterministic(intervals):
    assert _two_color_intervals(intervals) == _two_color_intervals(intervals)


def test_two_overlapping_segments_one_of_each():
    colors = _two_color_intervals([(0, 2), (1, 3)])
    assert sorted(colors) == ["a", "b"]


def test_three_segments_sharing_edge_get_one_b():
    colors = _two_color_intervals([(0, 2), (0, 2), (0, 2)])
    assert colors.count("b") == 1
    assert colors[0] == "b"  # smallest right endpoint, ties by input order


def test_disjoint_segments_stay_a():
    assert _two_color_intervals([(0, 1), (2, 3)]) == ["a", "a"]


def test_two_clique_color_line_rejects_mixed_lines():
    from epgt.coloring import SegmentsNotColinearError

    s1 = Segment(GridPoint(0, 0), GridPoint(2, 0))
    s2 = Segment(GridPoint(0, 1), GridPoint(2, 1))
    with pytest.raises(SegmentsNotColinearError):
        two_clique_color_line([s1, s2])


def test_lone_straight_path_colors():
    rep = Representation((path((0, 0), (1, 0), (2, 0)),))
    assert initial_colors(rep) == (ColorTriple("a", "b", "b"),)


def test_no_path_gets_all_a():
    for seed in range(30):
        rep = random_b1_family(8, 7, 7, seed)
        for triple in initial_colors(rep):
            assert tuple(triple) != ("a", "a", "a")


def test_identical_paths_get_opposite_segment_colors():
    p = path((0, 0), (1, 0), (1, 1))
    rep = Representation((p, p))
    c1, c2 = initial_colors(rep)
    assert {c1.horizontal, c2.horizontal} == {"a", "b"}
    assert {c1.vertical, c2.vertical} == {"a", "b"}


def test_claw_witness_not_monocolored_by_phase_one():
    rep = claw_witness()
    colors = initial_colors(rep)
    assert len(set(colors)) > 1


def test_initial_colors_rejects_two_bend_paths():
    rep = Representation((path((0, 0), (1, 0), (1, 1), (2, 2)),))
    with pytest.raises(NotB1FamilyError):
        initial_colors(rep)


def test_monocolored_claw_detection_and_recoloring():
    rep = _mono_claw_rep()
    colors = initial_colors(rep)
    assert colors[3] == colors[4] == colors[5] == ColorTriple("a", "a", "b")
    x = GridPoint(2, 1)
    assert monocolored_regular_claws_at(rep, colors, x) == [(3, 4, 5)]
    new_colors, touched = recolor_at(rep, colors, x)
    assert touched and set(touched) <= {3, 4}
    # rule I: recolored paths end on a single-a triple
    for i in touched:
        assert tuple(new_colors[i]).count("a") == 1
        # only a -> b flips
        for old_c, new_c in zip(colors[i], new_colors[i]):
            assert not (old_c == "b" and new_c == "a")
    # rule IV: nothing monocolored remains at x
    assert monocolored_regular_claws_at(rep, new_colors, x) == []


def test_recolor_is_noop_without_monocolored_claw():
    rep = claw_witness()
    colors = initial_colors(rep)
    new_colors, touched = recolor_at(rep, colors, GridPoint(1, 1))
    assert touched == ()
    assert new_colors == colors


def test_clique_color_end_to_end_mono_claw():
    rep = _mono_claw_rep()
    colored = clique_color(rep)
    assert verify_clique_coloring(rep, colored.indices)
    assert len(colored.events) >= 1
    # no path recolored twice, no straight path recolored
    touched = [ev.path_index for ev in colored.events]
    assert len(touched) == len(set(touched))
    for ev in colored.events:
        assert rep.paths[ev.path_index].bend_count == 1


def test_clique_color_corpus():
    reps = [sun_representation(k) for k in (4, 6, 9)]
    reps += [gallery(n) for n in GALLERY_CLIQUE_NAMES + GALLERY_CYCLE_NAMES]
    reps += [random_b1_family(10, 8, 8, seed) for seed in range(25)]
    for rep in reps:
        colored = clique_color(rep)
        assert colored.color_count <= 7
        assert verify_clique_coloring(rep, colored.indices)
        assert all(idx == TRIPLE_INDEX[t] for idx, t in zip(colored.indices, colored.triples))
        for x in {p.bend_point for p in rep.paths if p.bend_count == 1}:
            assert monocolored_regular_claws_at(rep, colored.triples, x) == []


def test_pairwise_disjoint_paths_any_coloring_passes():
    rep = Representation((path((0, 0), (1, 0)), path((5, 5), (6, 6))))
    colored = clique_color(rep)
    assert verify_clique_coloring(rep, colored.indices)


def test_verifier_catches_monochromatic_cliques():
    rep = claw_witness()  # K3
    assert not verify_clique_coloring(rep, (1, 1, 1))
    assert verify_clique_coloring(rep, (1, 1, 2))


def test_verifier_catches_monochromatic_edge_clique_of_five():
    paths = (
        path((0, 0), (1, 0)),
        path((0, 0), (1, 0), (2, 0)),
        path((0, 0), (1, 0), (1, 1)),
        path((1, 0), (0, 0), (0, 1)),
        path((2, 0), (1, 0), (0, 0), (0, 1)),
    )
    rep = Representation(paths)
    assert not verify_clique_coloring(rep, (3, 3, 3, 3, 3))
