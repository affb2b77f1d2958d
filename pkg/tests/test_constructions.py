"""Built-in families: suns, K_{2,n}, claw witness, gallery, random generator."""

from __future__ import annotations

import math

import pytest

from epgt.constructions import (
    UnknownSubtypeError,
    claw_witness,
    gallery,
    k2n_representation,
    random_b1_family,
    sun_representation,
)
from epgt.graphs import BadParameterError, complete_bipartite, sun
from epgt.intersect import edge_intersection, validate
from epgt.lattice import GridPoint, edge_between


def test_sun4_named_coordinates():
    rep = sun_representation(4)
    p2v = rep.paths[1]
    assert p2v.endpoints == (GridPoint(2, 3), GridPoint(3, 1))
    assert p2v.bend_point == GridPoint(3, 3)
    p1s = rep.paths[4]
    assert set(p1s.endpoints) == {GridPoint(2, 2), GridPoint(3, 2)}
    assert p1s.bend_point == GridPoint(3, 3)


def test_sun5_bounding_box():
    rep = sun_representation(5)
    assert (rep.rows, rep.cols) == (3, 5)  # ceil((5+4)/2) = 5


def test_sun_rejects_small_k():
    with pytest.raises(BadParameterError):
        sun_representation(3)


@pytest.mark.parametrize("k", range(4, 17))
def test_sun_is_valid_single_bend_representation(k):
    rep = sun_representation(k)
    assert len(rep.paths) == 2 * k
    assert all(p.bend_count <= 1 for p in rep.paths)
    report = validate(rep, sun(k), 1, labeled=True)
    assert report.passed
    assert report.rows <= 3
    assert report.cols <= math.ceil((k + 4) / 2)


@pytest.mark.parametrize("k", range(4, 11))
def test_sun_sharing_facts(k):
    rep = sun_representation(k)
    clique, outer = rep.paths[:k], rep.paths[k:]
    anchor = edge_between((2, 3), (3, 3))
    for p in clique:
        assert anchor in p.edge_set
    stretch = edge_between((1, 3), (2, 3))
    holders = {
        i for i, p in enumerate(rep.paths) if stretch in p.edge_set
    }
    assert holders == {0, k - 1, 2 * k - 1}  # v_1, v_k, s_k
    for i in range(1, k):
        s = outer[i - 1]
        v_i, v_next = clique[i - 1], clique[i]
        if i % 2 == 1:
            x0 = (i + 3) // 2
            e_own = edge_between((x0, 2), (x0 + 1, 3))
            e_next = edge_between((x0 + 1, 3), (x0 + 1, 2))
        else:
            x0 = (i + 2) // 2
            e_own = edge_between((x0 + 1, 2), (x0 + 1, 1))
            e_next = edge_between((x0, 1), (x0 + 1, 2))
        own_holders = [p for p in rep.paths if e_own in p.edge_set]
        next_holders = [p for p in rep.paths if e_next in p.edge_set]
        assert len(own_holders) == 2 and set(own_holders) == {s, v_i}
        assert len(next_holders) == 2 and set(next_holders) == {s, v_next}


def test_claw_witness_structure():
    rep = claw_witness()
    p1, p2, p3 = rep.paths
    assert all(len(edge_intersection(a, b)) == 1 for a, b in [(p1, p2), (p2, p3), (p1, p3)])
    assert not (p1.edge_set & p2.edge_set & p3.edge_set)
    assert p1.vertex_set & p2.vertex_set & p3.vertex_set == {GridPoint(1, 1)}


@pytest.mark.parametrize("n", range(1, 7))
def test_k2n_validates(n):
    rep = k2n_representation(n)
    assert validate(rep, complete_bipartite(2, n), 1, labeled=True).passed


def test_k2n_out_of_range():
    with pytest.raises(BadParameterError):
        k2n_representation(7)
    with pytest.raises(BadParameterError):
        k2n_representation(0)


def test_gallery_unknown_name():
    with pytest.raises(UnknownSubtypeError):
        gallery("dodo")


def test_random_family_deterministic():
    a = random_b1_family(5, 6, 6, 1)
    b = random_b1_family(5, 6, 6, 1)
    assert a.paths == b.paths


def test_random_family_single_path_tiny_window():
    rep = random_b1_family(1, 2, 2, 99)
    assert len(rep.paths) == 1


def test_random_family_all_single_bend_and_distinct():
    rep = random_b1_family(50, 8, 8, 7)
    assert len(set(rep.paths)) == 50
    assert all(p.is_bk(1) for p in rep.paths)
    for p in rep.paths:
        x0, y0, x1, y1 = p.bbox
        assert 0 <= x0 and x1 < 8 and 0 <= y0 and y1 < 8


def test_random_family_rejects_impossible_requests():
    with pytest.raises(BadParameterError):
        random_b1_family(1000, 2, 2, 0)
