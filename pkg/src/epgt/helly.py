"""Helly machinery for path families measured on grid edges: cores,
h-intersecting tests, strong-Helly evaluation, and bounded exhaustive
searches for violating families."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .lattice import GridEdge, GridLine, LatticePath
from .search import BoundsTooLargeError, SearchBounds, enumerate_paths


class EmptyFamilyError(ValueError):
    pass


class DuplicateMemberError(ValueError):
    pass


PathFamily = tuple[LatticePath, ...]


def family(paths: Iterable[LatticePath], allow_duplicates: bool = False) -> PathFamily:
    """Canonical family of paths; duplicates are rejected unless flagged."""
    members = tuple(paths)
    if not allow_duplicates and len(set(members)) != len(members):
        raise DuplicateMemberError("family holds a duplicate path")
    return members


def core_edges(fam: Sequence[LatticePath]) -> frozenset[GridEdge]:
    """Intersection of all members' edge sets."""
    if not fam:
        raise EmptyFamilyError("core of an empty family")
    it = iter(fam)
    core = next(it).edge_set
    for p in it:
        core &= p.edge_set
    return core


def is_h_intersecting(fam: Sequence[LatticePath], h: int) -> bool:
    """True iff every subfamily of min(h, |family|) members has a nonempty core."""
    if h < 1:
        raise ValueError("h must be >= 1")
    size = min(h, len(fam))
    return all(core_edges(sub) for sub in combinations(fam, size))


def strong_helly_equals(fam: Sequence[LatticePath], h: int) -> bool:
    """True iff every subfamily with at least h members contains h members
    whose core equals the subfamily's core."""
    if h < 1:
        raise ValueError("h must be >= 1")
    if len(fam) < h:
        raise ValueError("family smaller than h")
    for size in range(h, len(fam) + 1):
        for sub in combinations(fam, size):
            target = core_edges(sub)
            if not any(core_edges(pick) == target for pick in combinations(sub, h)):
                return False
    return True


@dataclass(frozen=True)
class HellySearchReport:
    window: tuple[int, int]
    max_seg_len: int | None
    max_bends: int
    paths_considered: int
    families_checked: int
    helly_witness: PathFamily | None
    strong_witness: PathFamily | None

    @property
    def passed(self) -> bool:
        return self.helly_witness is None and self.strong_witness is None

    def as_text(self) -> str:
        lines = [
            f"window:          {self.window[0]}x{self.window[1]} points",
            f"segment cap:     {self.max_seg_len}",
            f"bend cap:        {self.max_bends}",
            f"paths:           {self.paths_considered}",
            f"families tested: {self.families_checked}",
        ]
        if self.helly_witness is None:
            lines.append("3-intersecting family with empty core: none")
        else:
            lines.append("3-intersecting family with empty core: FOUND")
        if self.strong_witness is None:
            lines.append("family with no 3 members matching its core: none")
        else:
            lines.append("family with no 3 members matching its core: FOUND")
        return "\n".join(lines)


def helly_violation_search(
    width: int,
    height: int,
    max_seg_len: int | None = None,
    max_bends: int = 1,
) -> HellySearchReport:
    """Exhaustively scan 4-member families in the window for violations of
    the Helly bound 3 (empty core despite 3-intersecting) and of the strong
    bound 3 (no 3 members reproducing the family core).

    Any violating family of either kind pairwise shares edges, so candidates
    are 4-cliques of the edge-sharing relation; translation symmetry is
    broken by keeping only families whose bounding box touches both axes.
    """
    if width * height > 25:
        raise BoundsTooLargeError("violation search supports windows up to 5x5 points")
    if max_seg_len is not None and max_seg_len > 3:
        raise BoundsTooLargeError("violation search supports segment caps up to 3")
    paths = enumerate_paths(
        SearchBounds(width, height, max_bends=max_bends, max_seg_len=max_seg_len)
    )
    n = len(paths)
    by_edge: dict[GridEdge, list[int]] = {}
    for i, p in enumerate(paths):
        for e in p.edge_set:
            by_edge.setdefault(e, []).append(i)
    adj = [0] * n
    for holders in by_edge.values():
        mask = 0
        for i in holders:
            mask |= 1 << i
        for i in holders:
            adj[i] |= mask
    for i in range(n):
        adj[i] &= ~(1 << i)

    bboxes = [p.bbox for p in paths]
    helly_witness: PathFamily | None = None
    strong_witness: PathFamily | None = None
    checked = 0

    def bits(mask: int):
        while mask:
            low = mask & -mask
            mask ^= low
            yield low.bit_length() - 1

    for a in range(n):
        cand_b = adj[a] >> (a + 1) << (a + 1)
        for b in bits(cand_b):
            mask_ab = adj[a] & adj[b]
            cand_c = mask_ab >> (b + 1) << (b + 1)
            for c in bits(cand_c):
                cand_d = (mask_ab & adj[c]) >> (c + 1) << (c + 1)
                for d in bits(cand_d):
                    if min(bboxes[a][0], bboxes[b][0], bboxes[c][0], bboxes[d][0]):
                        continue
                    if min(bboxes[a][1], bboxes[b][1], bboxes[c][1], bboxes[d][1]):
                        continue
                    checked += 1
                    fam = (paths[a], paths[b], paths[c], paths[d])
                    cores3 = [core_edges(t) for t in combinations(fam, 3)]
                    full = cores3[0] & fam[3].edge_set
                    if helly_witness is None and not full and all(cores3):
                        helly_witness = fam
                    if strong_witness is None and all(c != full for c in cores3):
                        strong_witness = fam
                    if helly_witness is not None and strong_witness is not None:
                        return HellySearchReport(
                            (width, height), max_seg_len, max_bends, n,
                            checked, helly_witness, strong_witness,
                        )
    return HellySearchReport(
        (width, height), max_seg_len, max_bends, n,
        checked, helly_witness, strong_witness,
    )


@dataclass(frozen=True)
class BendForcingReport:
    """Outcome of the middle-edge avoidance checks."""

    window: tuple[int, int]
    colinear_triples: int
    colinear_ok: bool      # holding both outer colinear edges forces >= 3 bends
    subpath_triples: int
    subpath_ok: bool       # same along a single-bend path forces >= 2 bends

    @property
    def passed(self) -> bool:
        return self.colinear_ok and self.subpath_ok

    def as_text(self) -> str:
        return "\n".join(
            [
                f"window:                  {self.window[0]}x{self.window[1]} points",
                f"colinear triples:        {self.colinear_triples}"
                f" -> {'ok' if self.colinear_ok else 'FAIL'}",
                f"single-bend-path triples: {self.subpath_triples}"
                f" -> {'ok' if self.subpath_ok else 'FAIL'}",
            ]
        )


def bend_forcing_checks(width: int, height: int) -> BendForcingReport:
    """Verify by exhaustion that a path holding the outer two of three
    colinear edges while avoiding the middle one needs at least three bends,
    and that the analogous detour along any single-bend path needs at least
    two bends. Checked in contrapositive over the low-bend enumerations."""
    if width * height > 25:
        raise BoundsTooLargeError("bend forcing checks support windows up to 5x5 points")
    two_bend = enumerate_paths(SearchBounds(width, height, max_bends=2))
    one_bend = [p for p in two_bend if p.bend_count <= 1]

    def edge_index(paths: Sequence[LatticePath]) -> dict[GridEdge, set[int]]:
        out: dict[GridEdge, set[int]] = {}
        for i, p in enumerate(paths):
            for e in p.edge_set:
                out.setdefault(e, set()).add(i)
        return out

    idx2 = edge_index(two_bend)
    idx1 = edge_index(one_bend)

    # (a) three colinear edges on one grid line, middle strictly between
    lines: dict[GridLine, set[GridEdge]] = {}
    for e in idx2:
        lines.setdefault(e.line, set()).add(e)
    colinear_ok = True
    colinear_triples = 0
    for line, edges in lines.items():
        ordered = sorted(edges, key=lambda e: line.position(e.a))
        for i, j, k in combinations(range(len(ordered)), 3):
            e1, e2, e3 = ordered[i], ordered[j], ordered[k]
            colinear_triples += 1
            for pid in idx2.get(e1, set()) & idx2.get(e3, set()):
                if e2 not in two_bend[pid].edge_set:
                    colinear_ok = False  # a <=2-bend path makes the detour

    # (b) three edges in traversal order along any single-bend path
    subpath_ok = True
    triples: set[tuple[GridEdge, GridEdge, GridEdge]] = set()
    for q in one_bend:
        edges = q.edges
        for i, j, k in combinations(range(len(edges)), 3):
            triples.add((edges[i], edges[j], edges[k]))
    for e1, e2, e3 in triples:
        for pid in idx1.get(e1, set()) & idx1.get(e3, set()):
            if e2 not in one_bend[pid].edge_set:
                subpath_ok = False
    return BendForcingReport(
        (width, height), colinear_triples, colinear_ok, len(triples), subpath_ok
    )
