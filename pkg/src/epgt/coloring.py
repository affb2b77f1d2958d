"""Seven-color clique coloring of families of single-bend paths.

Phase one two-colors the segments on every grid line as intervals, with the
b class edge-disjoint and every inclusion-maximal overlap clique of size two
or more hitting b; missing components default to b, so no path is (a,a,a).
Phase two walks the grid points hosting bends and recolors at most four
bending paths per point to kill monocolored regular claws, constrained so
that no new monocolored clique can appear. The final color of a path is the
index of its component triple; at most seven triples occur.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import NamedTuple, Sequence

from .graphs import maximal_cliques
from .intersect import Representation, intersection_graph
from .lattice import Direction, GridLine, GridPoint, LatticePath, Segment


class NotB1FamilyError(ValueError):
    """The family holds a path with more than one bend."""


class SegmentsNotColinearError(ValueError):
    pass


class NoFeasibleRecoloringError(RuntimeError):
    """No recoloring satisfied the safety rules; must not happen on valid input."""

    def __init__(self, point: GridPoint):
        super().__init__(f"no feasible recoloring at {point}")
        self.point = point


class ColorTriple(NamedTuple):
    horizontal: str
    vertical: str
    diagonal: str


TRIPLE_INDEX: dict[ColorTriple, int] = {
    ColorTriple("a", "a", "b"): 1,
    ColorTriple("a", "b", "a"): 2,
    ColorTriple("b", "a", "a"): 3,
    ColorTriple("a", "b", "b"): 4,
    ColorTriple("b", "a", "b"): 5,
    ColorTriple("b", "b", "a"): 6,
    ColorTriple("b", "b", "b"): 7,
}

# only these triples can color a monocolored claw
_MONO_TRIPLES = (
    ColorTriple("a", "a", "b"),
    ColorTriple("a", "b", "a"),
    ColorTriple("b", "a", "a"),
)
# recoloring targets: exactly one component stays a
_RECOLOR_TARGETS = (
    ColorTriple("a", "b", "b"),
    ColorTriple("b", "a", "b"),
    ColorTriple("b", "b", "a"),
)

_DIRECTIONS = (Direction.HORIZONTAL, Direction.VERTICAL, Direction.DIAGONAL)


def two_clique_color_line(segments: Sequence[Segment]) -> list[str]:
    """Two-color colinear segments so b segments are pairwise edge-disjoint
    and every inclusion-maximal clique of two or more edge-overlapping
    segments holds a b.

    Sweeps the maximal overlap cliques left to right; a clique without a b
    gets one on its member with the smallest right endpoint (ties: smaller
    left endpoint, then input order) among members not overlapping an
    existing b.
    """
    if not segments:
        return []
    line = segments[0].line
    if any(s.line != line for s in segments):
        raise SegmentsNotColinearError("segments sit on different grid lines")
    intervals = [s.interval for s in segments]
    return _two_color_intervals(intervals)


def _two_color_intervals(intervals: Sequence[tuple[int, int]]) -> list[str]:
    n = len(intervals)
    colors = ["a"] * n
    if n == 0:
        return colors
    # stabbing cliques per unit edge position, deduplicated and maximal
    lo = min(iv[0] for iv in intervals)
    hi = max(iv[1] for iv in intervals)
    cliques: list[tuple[int, frozenset[int]]] = []
    seen: set[frozenset[int]] = set()
    for t in range(lo, hi):
        members = frozenset(
            i for i, (a, b) in enumerate(intervals) if a <= t and t + 1 <= b
        )
        if len(members) >= 2 and members not in seen:
            seen.add(members)
            cliques.append((t, members))
    maximal = [
        (t, m)
        for t, m in cliques
        if not any(m < other for _, other in cliques)
    ]

    def overlaps(i: int, j: int) -> bool:
        return min(intervals[i][1], intervals[j][1]) > max(intervals[i][0], intervals[j][0])

    for _, members in sorted(maximal):
        if any(colors[i] == "b" for i in members):
            continue
        safe = [
            i
            for i in members
            if not any(colors[j] == "b" and overlaps(i, j) for j in range(n))
        ]
        # inclusion-maximality of the swept cliques guarantees a safe member
        assert safe, "maximal overlap clique with no independent choice"
        pick = min(safe, key=lambda i: (intervals[i][1], intervals[i][0], i))
        colors[pick] = "b"
    return colors


def initial_colors(rep: Representation) -> tuple[ColorTriple, ...]:
    """Per-line interval coloring assembled into one triple per path;
    directions a path does not use default to b."""
    if any(p.bend_count > 1 for p in rep.paths):
        raise NotB1FamilyError("phase one needs paths with at most one bend")
    by_line: dict[GridLine, list[tuple[int, Segment]]] = {}
    for i, p in enumerate(rep.paths):
        for s in p.segments:
            by_line.setdefault(s.line, []).append((i, s))
    component: dict[tuple[int, Direction], str] = {}
    for line, entries in sorted(by_line.items(), key=lambda kv: repr(kv[0])):
        cols = two_clique_color_line([s for _, s in entries])
        for (i, s), c in zip(entries, cols):
            component[(i, s.direction)] = c
    out = []
    for i in range(rep.n):
        out.append(
            ColorTriple(
                component.get((i, Direction.HORIZONTAL), "b"),
                component.get((i, Direction.VERTICAL), "b"),
                component.get((i, Direction.DIAGONAL), "b"),
            )
        )
    return tuple(out)


def _component(triple: ColorTriple, d: Direction) -> str:
    return triple[_DIRECTIONS.index(d)]


def _bends_exactly_at(p: LatticePath, x: GridPoint) -> bool:
    return p.bend_count == 1 and p.bend_point == x


def _claw_triples_at(
    rep: Representation, x: GridPoint, adjacency
) -> list[tuple[int, int, int]]:
    """Regular claw triples centered at x: two paths bending there, a third
    through x not bending there, pairwise sharing edges, sharing only x, no
    common edge, and maximal in the intersection graph."""
    paths = rep.paths
    through = [i for i, p in enumerate(paths) if x in p.vertex_set]
    benders = [i for i in through if _bends_exactly_at(paths[i], x)]
    others = [i for i in through if not _bends_exactly_at(paths[i], x)]
    out = []
    for i, j in combinations(benders, 2):
        if j not in adjacency[i]:
            continue
        for k in others:
            if k not in adjacency[i] or k not in adjacency[j]:
                continue
            pi, pj, pk = paths[i], paths[j], paths[k]
            if pi.vertex_set & pj.vertex_set & pk.vertex_set != {x}:
                continue
            if pi.edge_set & pj.edge_set & pk.edge_set:
                continue
            trio = {i, j, k}
            if any(
                m not in trio and trio <= adjacency[m] | {m}
                for m in range(len(paths))
            ):
                continue  # not a maximal clique
            out.append((i, j, k))
    return out


def monocolored_regular_claws_at(
    rep: Representation,
    colors: Sequence[ColorTriple],
    x: GridPoint,
    adjacency=None,
) -> list[tuple[int, int, int]]:
    """Regular claws centered at x whose three paths carry one identical
    mono-able triple."""
    if adjacency is None:
        adjacency = intersection_graph(rep).adjacency
    out = []
    for i, j, k in _claw_triples_at(rep, x, adjacency):
        if colors[i] == colors[j] == colors[k] and colors[i] in _MONO_TRIPLES:
            out.append((i, j, k))
    return out


def _similar(p: LatticePath, q: LatticePath) -> bool:
    """Single-bend paths with segments on the same pair of directions."""
    return {s.direction for s in p.segments} == {s.direction for s in q.segments}


def _containment_backing(
    rep: Representation,
    colors: list[ColorTriple],
    idx: int,
    d: Direction,
    x: GridPoint,
) -> bool:
    """A recolored segment must sit inside an a-colored segment of a similar
    path bending at the same point."""
    p = rep.paths[idx]
    seg = p.segment_in_direction(d)
    if seg is None:
        return False
    for j, q in enumerate(rep.paths):
        if j == idx or not _bends_exactly_at(q, x) or not _similar(p, q):
            continue
        other = q.segment_in_direction(d)
        if other is None or not other.contains_segment(seg):
            continue
        if _component(colors[j], d) == "a":
            return True
    return False


def recolor_at(
    rep: Representation,
    colors: Sequence[ColorTriple],
    x: GridPoint,
    already_recolored: frozenset[int] = frozenset(),
    adjacency=None,
) -> tuple[tuple[ColorTriple, ...], tuple[int, ...]]:
    """Kill the monocolored regular claws centered at x by recoloring at most
    four paths bending there, never touching a path twice.

    Candidate subsets and target triples are enumerated in a fixed order and
    the first assignment satisfying the safety rules is applied:
    (I) recolored paths end on a single-a triple, flipping only a to b;
    (II) each flipped segment sits inside an a-colored segment of a similar
    path bending at x; (III) two recolored paths share only x, and in larger
    sets edge-sharing recolored pairs never sit in one regular claw;
    (IV) afterwards no monocolored claw centered at x remains.
    """
    if adjacency is None:
        adjacency = intersection_graph(rep).adjacency
    base = list(colors)
    if not monocolored_regular_claws_at(rep, base, x, adjacency):
        return tuple(base), ()
    benders = [
        i
        for i, p in enumerate(rep.paths)
        if _bends_exactly_at(p, x) and i not in already_recolored
    ]
    structural_claws = _claw_triples_at(rep, x, adjacency)

    for size in range(1, min(4, len(benders)) + 1):
        for subset in combinations(benders, size):
            feasible_targets = []
            for i in subset:
                options = []
                for target in _RECOLOR_TARGETS:
                    cur = base[i]
                    ok = target != cur
                    for d in _DIRECTIONS:
                        tc, cc = _component(target, d), _component(cur, d)
                        if tc == "a" and cc == "b":
                            ok = False  # only a -> b flips are allowed
                    if ok:
                        options.append(target)
                feasible_targets.append(options)
            for targets in product(*feasible_targets):
                trial = list(base)
                for i, t in zip(subset, targets):
                    trial[i] = t
                if not _rules_hold(rep, trial, base, subset, x, structural_claws):
                    continue
                if monocolored_regular_claws_at(rep, trial, x, adjacency):
                    continue  # rule IV
                return tuple(trial), tuple(subset)
    raise NoFeasibleRecoloringError(x)


def _rules_hold(
    rep: Representation,
    trial: list[ColorTriple],
    base: list[ColorTriple],
    subset: tuple[int, ...],
    x: GridPoint,
    structural_claws: list[tuple[int, int, int]],
) -> bool:
    # rule II: every flipped real segment needs an a-colored similar backing
    for i in subset:
        p = rep.paths[i]
        for d in _DIRECTIONS:
            if _component(base[i], d) == "a" and _component(trial[i], d) == "b":
                if p.segment_in_direction(d) is None:
                    continue  # missing component, nothing drawn
                if not _containment_backing(rep, trial, i, d, x):
                    return False
    # rule III
    if len(subset) == 2:
        p, q = rep.paths[subset[0]], rep.paths[subset[1]]
        if p.vertex_set & q.vertex_set != {x}:
            return False
    elif len(subset) > 2:
        for i, j in combinations(subset, 2):
            if rep.paths[i].edge_set & rep.paths[j].edge_set:
                if any(
                    i in trio and j in trio for trio in structural_claws
                ):
                    return False
    return True


@dataclass(frozen=True)
class RecolorEvent:
    point: GridPoint
    path_index: int
    old: ColorTriple
    new: ColorTriple


@dataclass(frozen=True)
class ColoredRepresentation:
    representation: Representation
    triples: tuple[ColorTriple, ...]
    indices: tuple[int, ...]
    events: tuple[RecolorEvent, ...]

    @property
    def color_count(self) -> int:
        return len(set(self.indices))


def clique_color(rep: Representation) -> ColoredRepresentation:
    """Full pipeline: line coloring, then recoloring at every bend-hosting
    grid point in row-major order, then triple-to-index assignment."""
    if any(p.bend_count > 1 for p in rep.paths):
        raise NotB1FamilyError("clique coloring needs paths with at most one bend")
    colors = initial_colors(rep)
    adjacency = intersection_graph(rep).adjacency
    recolored: set[int] = set()
    events: list[RecolorEvent] = []
    points = sorted(
        {p.bend_point for p in rep.paths if p.bend_count == 1},
        key=lambda pt: (pt.y, pt.x),
    )
    for x in points:
        new_colors, touched = recolor_at(
            rep, colors, x, frozenset(recolored), adjacency
        )
        for i in touched:
            events.append(RecolorEvent(x, i, colors[i], new_colors[i]))
            recolored.add(i)
        colors = new_colors
    indices = tuple(TRIPLE_INDEX[t] for t in colors)
    return ColoredRepresentation(rep, colors, indices, tuple(events))


def verify_clique_coloring(rep: Representation, indices: Sequence[int]) -> bool:
    """Independent check: no inclusion-maximal clique of size two or more of
    the intersection graph is monochromatic."""
    g = intersection_graph(rep)
    for clique in maximal_cliques(g):
        if len(clique) < 2:
            continue
        if len({indices[v] for v in clique}) == 1:
            return False
    return True
