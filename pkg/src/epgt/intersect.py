"""Edge-intersection semantics for families of paths on the triangular grid.

A Representation is a family of lattice paths, optionally labeled by the
vertices of a target graph. Two paths are adjacent when they share at least
one grid edge; the resulting graph is the edge-intersection graph of the
family.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .graphs import SimpleGraph, is_isomorphic
from .lattice import (
    GridEdge,
    GridLine,
    GridPoint,
    LatticePath,
    Segment,
    line_intersection,
)


class WindowTooLargeError(ValueError):
    """The requested exhaustive window is beyond the tractability guard."""


@dataclass(frozen=True)
class Representation:
    """A family of paths, optionally labeled by target-graph vertices."""

    paths: tuple[LatticePath, ...]
    labels: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "paths", tuple(self.paths))
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != len(self.paths):
                raise ValueError("labels must match paths one to one")
            if len(set(labels)) != len(labels):
                raise ValueError("labels must be distinct")
            object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return len(self.paths)

    @cached_property
    def bbox(self) -> tuple[int, int, int, int]:
        xs = [x for p in self.paths for x in (p.bbox[0], p.bbox[2])]
        ys = [y for p in self.paths for y in (p.bbox[1], p.bbox[3])]
        return min(xs), min(ys), max(xs), max(ys)

    @property
    def rows(self) -> int:
        return self.bbox[3] - self.bbox[1] + 1

    @property
    def cols(self) -> int:
        return self.bbox[2] - self.bbox[0] + 1

    def translated(self, dx: int, dy: int) -> Representation:
        return Representation(tuple(p.translated(dx, dy) for p in self.paths), self.labels)

    def double_flipped(self) -> Representation:
        return Representation(tuple(p.double_flipped() for p in self.paths), self.labels)


def edge_intersection(p: LatticePath, q: LatticePath) -> frozenset[GridEdge]:
    return p.edge_set & q.edge_set


def vertex_intersection(p: LatticePath, q: LatticePath) -> frozenset[GridPoint]:
    return p.vertex_set & q.vertex_set


def intersection_graph(rep: Representation) -> SimpleGraph:
    """Vertex i is path i; i ~ j iff the paths share at least one grid edge."""
    edges = [
        (i, j)
        for i, j in combinations(range(rep.n), 2)
        if rep.paths[i].edge_set & rep.paths[j].edge_set
    ]
    return SimpleGraph.from_edges(rep.n, edges)


@dataclass(frozen=True)
class UnderlyingGrid:
    """The segments of family members that take part in some edge
    intersection, tagged with the owning path's index."""

    members: tuple[tuple[int, Segment], ...]

    @cached_property
    def segments(self) -> frozenset[Segment]:
        return frozenset(s for _, s in self.members)

    @cached_property
    def points(self) -> frozenset[GridPoint]:
        return frozenset(p for s in self.segments for p in s.points)

    @cached_property
    def edges(self) -> frozenset[GridEdge]:
        return frozenset(e for s in self.segments for e in s.edges)

    @cached_property
    def lines(self) -> frozenset[GridLine]:
        return frozenset(s.line for s in self.segments)


def underlying_grid_of(paths: tuple[LatticePath, ...]) -> UnderlyingGrid:
    """A segment qualifies iff it holds at least one edge shared with another path."""
    keep = []
    for i, p in enumerate(paths):
        other_edges: set[GridEdge] = set()
        for j, q in enumerate(paths):
            if j != i:
                other_edges |= p.edge_set & q.edge_set
        if not other_edges:
            continue
        for s in p.segments:
            if s.edges & other_edges:
                keep.append((i, s))
    return UnderlyingGrid(tuple(keep))


def underlying_grid(rep: Representation) -> UnderlyingGrid:
    return underlying_grid_of(rep.paths)


# -- validation ----------------------------------------------------------------


@dataclass(frozen=True)
class ValidationReport:
    mode: str  # "labeled" | "unlabeled"
    max_bends: int
    bend_counts: tuple[int, ...]
    bends_ok: bool
    adjacency_ok: bool
    rows: int
    cols: int
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.bends_ok and self.adjacency_ok

    def as_text(self) -> str:
        lines = [
            f"mode:         {self.mode}",
            f"paths:        {len(self.bend_counts)}",
            f"bends:        max {max(self.bend_counts) if self.bend_counts else 0}"
            f" (allowed {self.max_bends}) -> {'ok' if self.bends_ok else 'FAIL'}",
            f"adjacency:    {'ok' if self.adjacency_ok else 'FAIL'}",
            f"bounding box: {self.rows} rows x {self.cols} columns",
            f"result:       {'PASS' if self.passed else 'FAIL'}",
        ]
        if self.detail:
            lines.insert(-1, f"detail:       {self.detail}")
        return "\n".join(lines)

    def as_keyvalues(self) -> str:
        kv = {
            "mode": self.mode,
            "paths": len(self.bend_counts),
            "max_bends_allowed": self.max_bends,
            "max_bends_seen": max(self.bend_counts) if self.bend_counts else 0,
            "bends_ok": int(self.bends_ok),
            "adjacency_ok": int(self.adjacency_ok),
            "rows": self.rows,
            "cols": self.cols,
            "passed": int(self.passed),
        }
        return "\n".join(f"{k}={v}" for k, v in kv.items())


def validate(
    rep: Representation,
    target: SimpleGraph,
    max_bends: int,
    labeled: bool = True,
) -> ValidationReport:
    """Check bend budget and adjacency of a representation against a target graph.

    Labeled mode checks exact edge-set equality under the label bijection;
    unlabeled mode checks isomorphism. Failures become report entries.
    """
    bend_counts = tuple(p.bend_count for p in rep.paths)
    bends_ok = all(b <= max_bends for b in bend_counts)
    detail = ""
    g = intersection_graph(rep)
    if labeled:
        if rep.labels is None:
            raise ValueError("labeled validation needs a labeled representation")
        if rep.n != target.n or set(rep.labels) != set(range(target.n)):
            adjacency_ok = False
            detail = "labels are not a bijection onto the target vertices"
        else:
            mapped = frozenset(
                (min(rep.labels[i], rep.labels[j]), max(rep.labels[i], rep.labels[j]))
                for i, j in g.edges
            )
            adjacency_ok = mapped == target.edges
            if not adjacency_ok:
                missing = sorted(target.edges - mapped)
                extra = sorted(mapped - target.edges)
                detail = f"missing edges {missing}, extra edges {extra}"
        mode = "labeled"
    else:
        adjacency_ok = is_isomorphic(g, target, size_limit=max(24, g.n, target.n))
        if not adjacency_ok:
            detail = "intersection graph is not isomorphic to the target"
        mode = "unlabeled"
    return ValidationReport(
        mode=mode,
        max_bends=max_bends,
        bend_counts=bend_counts,
        bends_ok=bends_ok,
        adjacency_ok=adjacency_ok,
        rows=rep.rows,
        cols=rep.cols,
        detail=detail,
    )


# -- exhaustive pair properties of single-bend paths ----------------------------


@dataclass(frozen=True)
class PairPropertyReport:
    """Outcome of the exhaustive single-bend pair checks over a window."""

    window: tuple[int, int]
    pairs_checked: int
    intersecting_pairs: int
    max_overlap_components: int   # colinear overlap components, must be <= 2
    max_overlap_lines: int        # distinct lines carrying shared edges, must be <= 2
    max_joint_components: int     # measured only: components of the vertex+edge overlap
    overlap_ok: bool
    bend_type_dichotomy_ok: bool
    pinch_forcing_ok: bool
    pinch_cases: int
    parallel_obstruction_ok: bool
    crossing_bend_ok: bool
    paths_checked: int

    @property
    def passed(self) -> bool:
        return (
            self.overlap_ok
            and self.bend_type_dichotomy_ok
            and self.pinch_forcing_ok
            and self.parallel_obstruction_ok
            and self.crossing_bend_ok
        )

    def as_text(self) -> str:
        def mark(ok: bool) -> str:
            return "ok" if ok else "FAIL"

        return "\n".join(
            [
                f"window:                    {self.window[0]}x{self.window[1]} points",
                f"single-bend paths:         {self.paths_checked}",
                f"pairs checked:             {self.pairs_checked}"
                f" ({self.intersecting_pairs} share an edge)",
                f"overlap components <= 2:   {mark(self.overlap_ok)}"
                f" (max {self.max_overlap_components} on {self.max_overlap_lines} lines)",
                f"joint components (info):   max {self.max_joint_components}",
                f"same-bend-or-one-segment:  {mark(self.bend_type_dichotomy_ok)}",
                f"colinear pinch forcing:    {mark(self.pinch_forcing_ok)}"
                f" ({self.pinch_cases} cases)",
                f"parallel-line obstruction: {mark(self.parallel_obstruction_ok)}",
                f"crossing-line bend rule:   {mark(self.crossing_bend_ok)}",
                f"result:                    {'PASS' if self.passed else 'FAIL'}",
            ]
        )


def _colinear_components(edges: frozenset[GridEdge]) -> tuple[int, int]:
    """(number of contiguous colinear runs, number of distinct lines)."""
    by_line: dict[GridLine, list[int]] = {}
    for e in edges:
        by_line.setdefault(e.line, []).append(e.line.position(e.a))
    comps = 0
    for positions in by_line.values():
        positions.sort()
        comps += 1
        comps += sum(1 for a, b in zip(positions, positions[1:]) if b != a + 1)
    return comps, len(by_line)


def _joint_components(p: LatticePath, q: LatticePath) -> int:
    """Connected pieces of the shared vertices plus shared edges."""
    pts = p.vertex_set & q.vertex_set
    if not pts:
        return 0
    shared = p.edge_set & q.edge_set
    parent = {v: v for v in pts}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in shared:
        ra, rb = find(e.a), find(e.b)
        if ra != rb:
            parent[ra] = rb
    return len({find(v) for v in pts})


def pair_property_suite(width: int, height: int) -> PairPropertyReport:
    """Exhaustively verify the structural facts about single-bend path pairs.

    Over every pair of distinct 1-bend paths in a width x height point window:
    shared edges form at most two contiguous colinear runs on at most two
    lines; a pair sharing edges either bends at the same point with the same
    angle class or its overlap sits inside one segment; two colinear segments
    meeting at a single point force both bends there; and no path with at
    most one bend can hold edges of two parallel lines.
    """
    if width * height > 36:
        raise WindowTooLargeError("pair property suite supports windows up to 6x6 points")
    from .search import SearchBounds, enumerate_paths

    all_paths = enumerate_paths(SearchBounds(width, height, max_bends=1))
    one_bend = [p for p in all_paths if p.bend_count == 1]

    max_overlap_components = 0
    max_overlap_lines = 0
    max_joint = 0
    overlap_ok = True
    dichotomy_ok = True
    pinch_ok = True
    pinch_cases = 0
    pairs = len(one_bend) * (len(one_bend) - 1) // 2

    # Only pairs that share an edge carry non-vacuous obligations; find them
    # through an edge -> paths index instead of scanning all pairs.
    by_edge: dict[GridEdge, list[int]] = {}
    for idx, p in enumerate(one_bend):
        for e in p.edge_set:
            by_edge.setdefault(e, []).append(idx)
    sharing: set[tuple[int, int]] = set()
    for holders in by_edge.values():
        for i, j in combinations(holders, 2):
            sharing.add((i, j) if i < j else (j, i))

    for i, j in sharing:
        p, q = one_bend[i], one_bend[j]
        shared = p.edge_set & q.edge_set
        comps, nlines = _colinear_components(shared)
        max_overlap_components = max(max_overlap_components, comps)
        max_overlap_lines = max(max_overlap_lines, nlines)
        if comps > 2 or nlines > 2:
            overlap_ok = False
        max_joint = max(max_joint, _joint_components(p, q))
        same_bend = (
            p.bend_point == q.bend_point
            and p.bend_shape().angle_class == q.bend_shape().angle_class
        )
        in_one_segment = any(shared <= s.edges for s in (*p.segments, *q.segments))
        if not (same_bend or in_one_segment):
            dichotomy_ok = False
        # two colinear segments meeting in exactly one point b pinch the pair:
        # both paths must bend at b and the overlap must leave that line
        for sp in p.segments:
            for sq in q.segments:
                if sp.line != sq.line:
                    continue
                lo = max(sp.interval[0], sq.interval[0])
                hi = min(sp.interval[1], sq.interval[1])
                if lo != hi:
                    continue
                pinch_cases += 1
                b = sp.line.point_at(lo)
                if p.bend_point != b or q.bend_point != b:
                    pinch_ok = False
                if not any(b in (e.a, e.b) for e in shared):
                    pinch_ok = False
                if any(e.line == sp.line for e in shared):
                    pinch_ok = False
    intersecting = len(sharing)

    parallel_ok = True
    crossing_ok = True
    for p in all_paths:
        lines = sorted(p.lines, key=repr)
        if len(lines) >= 2:
            for l1, l2 in combinations(lines, 2):
                meet = line_intersection(l1, l2)
                if meet is None:
                    parallel_ok = False  # edges on two disjoint parallel lines
                elif isinstance(meet, GridPoint) and p.bend_count == 1:
                    if p.bend_point != meet:
                        crossing_ok = False
                    segs = {s.line: s for s in p.segments}
                    if set(segs) != {l1, l2}:
                        crossing_ok = False

    return PairPropertyReport(
        window=(width, height),
        pairs_checked=pairs,
        intersecting_pairs=intersecting,
        max_overlap_components=max_overlap_components,
        max_overlap_lines=max_overlap_lines,
        max_joint_components=max_joint,
        overlap_ok=overlap_ok,
        bend_type_dichotomy_ok=dichotomy_ok,
        pinch_forcing_ok=pinch_ok,
        pinch_cases=pinch_cases,
        parallel_obstruction_ok=parallel_ok,
        crossing_bend_ok=crossing_ok,
        paths_checked=len(one_bend),
    )
