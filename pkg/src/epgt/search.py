"""Bounded exhaustive search for path representations of small target graphs.

Paths are enumerated inside a rectangular window of grid points; a target
graph gets a representation by backtracking over path assignments with
adjacency pruning. Exhaustion and timeout are reported as distinct outcomes,
since only exhaustion supports impossibility claims.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache

from .graphs import SimpleGraph
from .intersect import Representation
from .lattice import GridPoint, LatticePath, UNIT_RAYS


class BoundsTooLargeError(ValueError):
    """The window is beyond the configured tractability limit."""


@dataclass(frozen=True)
class SearchBounds:
    """Window of width x height grid points, with bend and segment caps."""

    width: int
    height: int
    max_bends: int = 1
    max_seg_len: int | None = None
    area_limit: int = 100

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise BoundsTooLargeError("window must contain at least one point")
        if self.width * self.height > self.area_limit:
            raise BoundsTooLargeError(
                f"window {self.width}x{self.height} exceeds the"
                f" {self.area_limit}-point limit"
            )
        if self.max_bends < 0:
            raise BoundsTooLargeError("max_bends must be nonnegative")


@lru_cache(maxsize=32)
def _enumerate_cached(
    width: int, height: int, max_bends: int, max_seg_len: int | None
) -> tuple[LatticePath, ...]:
    def inside(x: int, y: int) -> bool:
        return 0 <= x < width and 0 <= y < height

    seg_cap = max_seg_len if max_seg_len is not None else max(width, height)
    found: set[LatticePath] = set()

    def extend(chain: list[GridPoint], last_ray: tuple[int, int] | None, bends: int):
        if len(chain) >= 2:
            found.add(LatticePath(tuple(chain)))
        if last_ray is not None and bends == max_bends:
            return
        for ray in UNIT_RAYS:
            if last_ray is not None and (ray == last_ray or
                                         (ray[0] + last_ray[0], ray[1] + last_ray[1]) == (0, 0)):
                continue
            x, y = chain[-1]
            run: list[GridPoint] = []
            for step in range(1, seg_cap + 1):
                x, y = x + ray[0], y + ray[1]
                if not inside(x, y):
                    break
                p = GridPoint(x, y)
                if p in chain:
                    break
                run.append(p)
                extend(chain + run[: step], ray, bends + (1 if last_ray is not None else 0))

    for sx in range(width):
        for sy in range(height):
            extend([GridPoint(sx, sy)], None, 0)
    return tuple(sorted(found, key=lambda p: p.vertices))


def enumerate_paths(bounds: SearchBounds) -> tuple[LatticePath, ...]:
    """All canonical paths with at most max_bends bends inside the window,
    duplicate-free, in deterministic (sorted) order."""
    return _enumerate_cached(
        bounds.width, bounds.height, bounds.max_bends, bounds.max_seg_len
    )


def _edge_adjacency(paths: tuple[LatticePath, ...]) -> list[int]:
    """Bitmask per path of the other paths sharing at least one grid edge."""
    by_edge: dict = {}
    for i, p in enumerate(paths):
        for e in p.edge_set:
            by_edge.setdefault(e, []).append(i)
    adj = [0] * len(paths)
    for holders in by_edge.values():
        mask = 0
        for i in holders:
            mask |= 1 << i
        for i in holders:
            adj[i] |= mask
    for i in range(len(paths)):
        adj[i] &= ~(1 << i)
    return adj


@dataclass(frozen=True)
class SearchResult:
    status: str  # "found" | "exhausted" | "timeout"
    representation: Representation | None
    nodes: int
    elapsed: float
    paths_considered: int

    @property
    def found(self) -> bool:
        return self.status == "found"


class _Timeout(Exception):
    pass


def find_representation(
    target: SimpleGraph,
    bounds: SearchBounds,
    timeout: float | None = None,
    max_vertices: int = 12,
) -> SearchResult:
    """Backtracking search for a labeled single-bend (or B_k) representation.

    Vertices are assigned in descending-degree order; a candidate path must
    edge-intersect exactly the already-assigned neighbors. Vertices with
    identical neighborhoods are interchangeable, so their path indices are
    forced ascending. The whole window is searched, so an exhausted verdict
    covers every placement inside it.
    """
    if target.n > max_vertices:
        raise ValueError(f"targets are limited to {max_vertices} vertices")
    start = time.monotonic()
    # long paths first: high-degree vertices need them, so hits come earlier;
    # the order is fixed, keeping runs deterministic
    paths = tuple(
        sorted(enumerate_paths(bounds), key=lambda p: (-len(p.edges), p.vertices))
    )
    if target.n == 0:
        return SearchResult("found", Representation((), ()), 0, 0.0, len(paths))
    adj = _edge_adjacency(paths)
    full_mask = (1 << len(paths)) - 1

    order = sorted(range(target.n), key=lambda v: (-target.degree(v), v))
    # group interchangeable vertices (identical neighborhoods) to force
    # ascending path indices within a group
    sig = {v: frozenset(target.adjacency[v] - {v}) for v in range(target.n)}
    order.sort(key=lambda v: (-target.degree(v), sorted(sig[v]), v))
    same_as_prev = [False] * target.n
    for k in range(1, target.n):
        u, v = order[k - 1], order[k]
        same_as_prev[k] = (
            sig[u] == sig[v] and v not in target.adjacency[u]
        )
    # how many vertices from position k onward sit in one interchangeable
    # run; their candidates are drawn from a common shrinking pool
    group_run = [1] * target.n
    for k in range(target.n - 2, -1, -1):
        if same_as_prev[k + 1]:
            group_run[k] = group_run[k + 1] + 1

    assigned: list[int] = []
    nodes = 0
    deadline = None if timeout is None else start + timeout

    def dfs(k: int) -> bool:
        nonlocal nodes
        if k == target.n:
            return True
        v = order[k]
        cands = full_mask
        for pos in range(k):
            u = order[pos]
            if v in target.adjacency[u]:
                # a path always shares edges with itself, so reusing the same
                # path for an adjacent vertex is legitimate
                cands &= adj[assigned[pos]] | (1 << assigned[pos])
            else:
                cands &= ~adj[assigned[pos]] & ~(1 << assigned[pos])
        if same_as_prev[k] and assigned:
            cands &= ~((1 << (assigned[-1] + 1)) - 1)
        if cands.bit_count() < group_run[k]:
            return False
        while cands:
            low = cands & -cands
            cands ^= low
            idx = low.bit_length() - 1
            nodes += 1
            if deadline is not None and nodes % 4096 == 0 and time.monotonic() > deadline:
                raise _Timeout
            assigned.append(idx)
            if dfs(k + 1):
                return True
            assigned.pop()
        return False

    try:
        ok = dfs(0)
    except _Timeout:
        return SearchResult(
            "timeout", None, nodes, time.monotonic() - start, len(paths)
        )
    if not ok:
        return SearchResult(
            "exhausted", None, nodes, time.monotonic() - start, len(paths)
        )
    by_vertex: dict[int, LatticePath] = {
        order[pos]: paths[assigned[pos]] for pos in range(target.n)
    }
    rep = Representation(
        tuple(by_vertex[v] for v in range(target.n)), tuple(range(target.n))
    )
    return SearchResult("found", rep, nodes, time.monotonic() - start, len(paths))


@dataclass(frozen=True)
class DisjointNeighborReport:
    """Largest family of pairwise edge-disjoint common neighbors of two
    edge-disjoint paths, maximized over all placements in the window."""

    window: tuple[int, int]
    pairs_checked: int
    max_disjoint_common: int
    paths_considered: int

    @property
    def at_most_six(self) -> bool:
        return self.max_disjoint_common <= 6

    def as_text(self) -> str:
        return "\n".join(
            [
                f"window:              {self.window[0]}x{self.window[1]} points",
                f"paths:               {self.paths_considered}",
                f"anchored pairs:      {self.pairs_checked}",
                f"max disjoint common: {self.max_disjoint_common}",
                f"bound <= 6:          {'ok' if self.at_most_six else 'FAIL'}",
            ]
        )


def _max_disjoint(cands: int, adj: list[int], cap: int = 12) -> int:
    """Maximum pairwise edge-disjoint subset size within a candidate bitmask."""
    best = 0

    def rec(avail: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if best >= cap or size + avail.bit_count() <= best:
            return
        low = avail & -avail
        v = low.bit_length() - 1
        rec(avail & ~low & ~adj[v], size + 1)
        rec(avail & ~low, size)

    rec(cands, 0)
    return best


def k27_counting_check(bounds: SearchBounds) -> DisjointNeighborReport:
    """Measure, over all placements of two edge-disjoint paths (up to
    translation), how many pairwise edge-disjoint paths can meet both.

    The hub structure of a single-bend K_{2,n} representation needs n such
    common neighbors, so the reported maximum bounds the n attainable in the
    window. The result is evidence at the window scale, not a proof.
    """
    paths = enumerate_paths(bounds)
    adj = _edge_adjacency(paths)
    bboxes = [p.bbox for p in paths]
    best = 0
    pairs = 0
    for i in range(len(paths)):
        ix0, iy0, _, _ = bboxes[i]
        ai = adj[i]
        for j in range(i + 1, len(paths)):
            jx0, jy0, _, _ = bboxes[j]
            if min(ix0, jx0) != 0 or min(iy0, jy0) != 0:
                continue  # translation anchoring: joint box touches both axes
            if (ai >> j) & 1:
                continue  # hubs must be edge-disjoint
            pairs += 1
            common = ai & adj[j]
            if common.bit_count() <= best:
                continue
            best = max(best, _max_disjoint(common, adj))
    return DisjointNeighborReport(
        window=(bounds.width, bounds.height),
        pairs_checked=pairs,
        max_disjoint_common=best,
        paths_considered=len(paths),
    )
