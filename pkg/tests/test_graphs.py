"""Graph machinery against brute-force oracles."""

from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from epgt.graphs import (
    BadParameterError,
    SimpleGraph,
    SizeLimitExceededError,
    catalog,
    chordless_4cycles,
    claw,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    find_isomorphism,
    format_graph,
    is_isomorphic,
    maximal_cliques,
    parse_graph,
    star,
    sun,
)


def brute_maximal_cliques(g: SimpleGraph) -> list[tuple[int, ...]]:
    sets = []
    for r in range(1, g.n + 1):
        for sub in combinations(range(g.n), r):
            if all(g.has_edge(u, v) for u, v in combinations(sub, 2)):
                sets.append(set(sub))
    out = [tuple(sorted(s)) for s in sets if not any(s < t for t in sets)]
    return sorted(out)


def test_triangle_single_clique():
    assert maximal_cliques(complete_graph(3)) == [(0, 1, 2)]


def test_path_graph_cliques():
    g = SimpleGraph.from_edges(3, [(0, 1), (1, 2)])
    assert maximal_cliques(g) == [(0, 1), (1, 2)]


def test_isolated_vertex_is_clique():
    g = SimpleGraph.from_edges(2, [])
    assert maximal_cliques(g) == [(0,), (1,)]


def test_sun4_cliques_match_bruteforce():
    g = sun(4)
    got = maximal_cliques(g)
    assert got == brute_maximal_cliques(g)
    assert (0, 1, 2, 3) in got  # the inner clique
    assert all(len(c) in (3, 4) for c in got)


graphs_small = st.integers(2, 8).flatmap(
    lambda n: st.builds(
        SimpleGraph.from_edges,
        st.just(n),
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(
                lambda e: e[0] != e[1]
            ),
            max_size=16,
        ),
    )
)


@given(graphs_small)
@settings(max_examples=120, deadline=None)
def test_maximal_cliques_agree_with_bruteforce(g):
    got = maximal_cliques(g)
    assert got == brute_maximal_cliques(g)
    # pairwise inclusion-incomparable and covering every edge
    as_sets = [set(c) for c in got]
    for a, b in combinations(as_sets, 2):
        assert not (a <= b or b <= a)
    for u, v in g.edges:
        assert any(u in c and v in c for c in as_sets)


def brute_chordless_4cycles(g: SimpleGraph) -> int:
    count = 0
    for quad in combinations(range(g.n), 4):
        for a, b, c, d in [
            (quad[0], quad[1], quad[2], quad[3]),
            (quad[0], quad[1], quad[3], quad[2]),
            (quad[0], quad[2], quad[1], quad[3]),
        ]:
            ring = [(a, b), (b, c), (c, d), (d, a)]
            if all(g.has_edge(u, v) for u, v in ring):
                if not g.has_edge(a, c) and not g.has_edge(b, d):
                    count += 1
    return count


def test_c4_has_one_chordless_cycle():
    assert len(chordless_4cycles(cycle_graph(4))) == 1


def test_k4_has_none():
    assert chordless_4cycles(complete_graph(4)) == []


def test_k23_has_three():
    assert len(chordless_4cycles(complete_bipartite(2, 3))) == 3


@given(graphs_small)
@settings(max_examples=120, deadline=None)
def test_chordless_4cycles_count_matches_bruteforce(g):
    got = chordless_4cycles(g)
    assert len(set(got)) == len(got)
    assert len(got) == brute_chordless_4cycles(g)
    for a, b, c, d in got:
        assert g.has_edge(a, b) and g.has_edge(b, c)
        assert g.has_edge(c, d) and g.has_edge(d, a)
        assert not g.has_edge(a, c) and not g.has_edge(b, d)


def test_c4_isomorphic_to_k22():
    assert is_isomorphic(cycle_graph(4), complete_bipartite(2, 2))


def test_c5_not_isomorphic_to_c4():
    assert not is_isomorphic(cycle_graph(5), cycle_graph(4))


def test_isomorphism_witness_is_valid():
    g = sun(3)
    h = SimpleGraph.from_edges(
        g.n, [(g.n - 1 - u, g.n - 1 - v) for u, v in g.edges]
    )
    m = find_isomorphism(g, h)
    assert m is not None
    for u, v in combinations(range(g.n), 2):
        assert g.has_edge(u, v) == h.has_edge(m[u], m[v])


@given(graphs_small, st.randoms(use_true_random=False))
@settings(max_examples=60, deadline=None)
def test_isomorphism_invariant_under_relabeling(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = SimpleGraph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges])
    assert is_isomorphic(g, h)
    assert is_isomorphic(h, g)


def test_size_limit():
    big = complete_graph(25)
    with pytest.raises(SizeLimitExceededError):
        is_isomorphic(big, big)


def test_sun_counts():
    g = sun(3)
    assert g.n == 6
    assert len(g.edges) == 9  # 2k outer + k(k-1)/2 inner = 6 + 3


def test_k26_counts():
    g = complete_bipartite(2, 6)
    assert g.n == 8
    assert len(g.edges) == 12


def test_claw_is_k13():
    assert is_isomorphic(claw(), star(3))
    assert claw().degree_sequence() == (1, 1, 1, 3)


def test_catalog_dispatch_and_errors():
    assert catalog("sun", k=5).n == 10
    assert catalog("cycle", k=4).n == 4
    assert catalog("biclique", m=2, n=3).n == 5
    with pytest.raises(BadParameterError):
        catalog("nope")
    with pytest.raises(BadParameterError):
        catalog("sun", k=2)
    with pytest.raises(BadParameterError):
        cycle_graph(2)


def test_graph_file_roundtrip():
    g = sun(4)
    assert parse_graph(format_graph(g)) == g
