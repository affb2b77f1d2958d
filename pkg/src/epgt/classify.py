"""Archetype classification for cliques and chordless 4-cycles realized by
single-bend paths on the triangular grid.

A triangle of mutually edge-intersecting paths is an edge clique (one shared
grid edge), a claw clique (a single shared point and empty edge core), or a
triangular clique: a right triangle of the underlying grid with one path
bending at each corner. Triangular cliques split into six subtypes by how
each path relates to the two triangle edges at its corner: inside (I, both),
midway (M, exactly one) or outside (O, neither).

A chordless 4-cycle is a true or false pie (four arms at a hub), a frame
(bends at the corners of a rectangle, trapezoid or parallelogram), a flag
(one right triangle) or a butterfly (two right triangles sharing a corner).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .intersect import UnderlyingGrid, underlying_grid_of
from .lattice import (
    Direction,
    GridEdge,
    GridLine,
    GridPoint,
    LatticePath,
    RAY_ANGLE,
    Segment,
    line_intersection,
)


class NotACliqueError(ValueError):
    """The given paths do not pairwise share grid edges."""


class NotB1Error(ValueError):
    """A path has more than one bend."""


class UnclassifiableError(ValueError):
    """No archetype matched; valid inputs must never reach this."""


class AssumptionViolatedError(ValueError):
    """A triangular candidate whose paths do not all bend at the corners."""


class NotChordlessC4Error(ValueError):
    """The four paths do not realize a chordless 4-cycle in the given order."""


# -- right triangles -----------------------------------------------------------


@dataclass(frozen=True)
class RightTriangle:
    """Closed triangle with one side per direction; the only two shapes are
    {(x,y),(x+k,y),(x+k,y+k)} (lower) and {(x,y),(x,y+k),(x+k,y+k)} (upper)."""

    corners: frozenset[GridPoint]

    @classmethod
    def from_corners(cls, pts: Iterable[GridPoint]) -> RightTriangle | None:
        pts = sorted(GridPoint(*p) for p in pts)
        if len(pts) != 3:
            return None
        a, b, c = pts
        # lower: (x,y), (x+k,y), (x+k,y+k)
        k = b.x - a.x
        if k > 0 and b == GridPoint(a.x + k, a.y) and c == GridPoint(a.x + k, a.y + k):
            return cls(frozenset(pts))
        # upper: (x,y), (x,y+k), (x+k,y+k)
        k = b.y - a.y
        if k > 0 and b == GridPoint(a.x, a.y + k) and c == GridPoint(a.x + k, a.y + k):
            return cls(frozenset(pts))
        return None

    @cached_property
    def sides(self) -> tuple[Segment, Segment, Segment]:
        a, b, c = sorted(self.corners)
        return (Segment(a, b), Segment(b, c), Segment(a, c))

    @cached_property
    def edges(self) -> frozenset[GridEdge]:
        return frozenset(e for s in self.sides for e in s.edges)

    def corner_edges(self, corner: GridPoint) -> tuple[GridEdge, GridEdge]:
        """The two unit triangle edges incident to a corner."""
        if corner not in self.corners:
            raise ValueError(f"{corner} is not a corner of {self}")
        out = [e for e in self.edges if corner in (e.a, e.b)]
        assert len(out) == 2
        return out[0], out[1]

    def __repr__(self) -> str:
        return "Tri" + str(sorted(self.corners))


def right_triangles_in(grid: UnderlyingGrid) -> list[RightTriangle]:
    """All right triangles whose sides are covered by the grid's edges."""
    lines_by_dir: dict[Direction, set[GridLine]] = {d: set() for d in Direction}
    for line in grid.lines:
        lines_by_dir[line.direction].add(line)
    out = []
    for lh in lines_by_dir[Direction.HORIZONTAL]:
        for lv in lines_by_dir[Direction.VERTICAL]:
            for ld in lines_by_dir[Direction.DIAGONAL]:
                c, a, d = lh.offset, lv.offset, ld.offset
                if a + d == c:
                    continue  # concurrent lines
                corners = (
                    GridPoint(c - d, c),
                    GridPoint(a, c),
                    GridPoint(a, a + d),
                )
                tri = RightTriangle.from_corners(corners)
                if tri is not None and tri.edges <= grid.edges:
                    out.append(tri)
    return sorted(out, key=lambda t: sorted(t.corners))


# -- clique classes -------------------------------------------------------------


@dataclass(frozen=True)
class EdgeClique:
    shared_edges: frozenset[GridEdge]

    def describe(self) -> str:
        return "edge-clique on " + ", ".join(repr(e) for e in sorted(
            self.shared_edges, key=lambda e: (e.a, e.b)))


@dataclass(frozen=True)
class ClawClique:
    center: GridPoint

    def describe(self) -> str:
        return f"claw-clique centered at {self.center}"


@dataclass(frozen=True)
class TriangularClique:
    subtype: str  # flag | paw | cricket | bull | extended-bull | net
    triple: tuple[str, ...]  # sorted corner roles, e.g. ("I", "I", "M")
    triangle: RightTriangle

    def describe(self) -> str:
        roles = ",".join(self.triple)
        return f"{self.subtype}-clique ({roles}) on {self.triangle}"


CliqueClass = EdgeClique | ClawClique | TriangularClique

# the six realizable corner-role patterns of a triangular clique
TRIPLE_TO_SUBTYPE: dict[tuple[str, ...], str] = {
    ("I", "I", "I"): "flag",
    ("I", "I", "M"): "paw",
    ("I", "I", "O"): "cricket",
    ("I", "M", "M"): "bull",
    ("I", "M", "O"): "extended-bull",
    ("M", "M", "M"): "net",
}


class NotBentAtCornerError(ValueError):
    """The path does not bend exactly at the requested corner."""


def path_corner_category(
    path: LatticePath, triangle: RightTriangle, corner: GridPoint
) -> str:
    """I if the path holds both triangle edges at its corner, M exactly one,
    O neither. The path must bend exactly at the corner."""
    if path.bend_count != 1 or path.bend_point != corner:
        raise NotBentAtCornerError(f"path does not bend at {corner}")
    e1, e2 = triangle.corner_edges(corner)
    held = (e1 in path.edge_set) + (e2 in path.edge_set)
    return {2: "I", 1: "M", 0: "O"}[held]


def _check_pairwise_clique(paths: Sequence[LatticePath]) -> None:
    for p, q in combinations(paths, 2):
        if not (p.edge_set & q.edge_set):
            raise NotACliqueError("paths do not pairwise share a grid edge")


def _check_b1(paths: Sequence[LatticePath]) -> None:
    for p in paths:
        if p.bend_count > 1:
            raise NotB1Error(f"path with {p.bend_count} bends")


def _common_edges(paths: Sequence[LatticePath]) -> frozenset[GridEdge]:
    it = iter(paths)
    core = next(it).edge_set
    for p in it:
        core &= p.edge_set
    return core


def _common_vertices(paths: Sequence[LatticePath]) -> frozenset[GridPoint]:
    it = iter(paths)
    core = next(it).vertex_set
    for p in it:
        core &= p.vertex_set
    return core


def classify_triangle(
    p1: LatticePath, p2: LatticePath, p3: LatticePath
) -> CliqueClass:
    """Classify three pairwise edge-intersecting single-bend paths.

    Order of tests: a common edge wins; otherwise three distinct bend points
    forming a right triangle of the underlying grid give the triangular
    subtypes; otherwise a single common point is a claw. The claw test runs
    after the triangular one because cliques built around an outside path
    also share the outside corner as their only common point.
    """
    paths = (p1, p2, p3)
    _check_b1(paths)
    _check_pairwise_clique(paths)

    core = _common_edges(paths)
    if core:
        return EdgeClique(core)

    bends = [p.bend_point for p in paths]
    if all(b is not None for b in bends) and len(set(bends)) == 3:
        tri = RightTriangle.from_corners(bends)
        if tri is not None:
            grid = underlying_grid_of(paths)
            if tri.edges <= grid.edges:
                roles = tuple(
                    sorted(
                        path_corner_category(p, tri, p.bend_point) for p in paths
                    )
                )
                subtype = TRIPLE_TO_SUBTYPE.get(roles)
                if subtype is not None:
                    return TriangularClique(subtype, roles, tri)

    common = _common_vertices(paths)
    if len(common) == 1:
        return ClawClique(next(iter(common)))
    raise UnclassifiableError(
        "triangle of paths fits no archetype; this indicates a bug"
    )


def classify_maximal_clique(
    rep, clique_vertices: Iterable[int]
) -> CliqueClass:
    """Classify a maximal clique of an intersection graph, any size.

    Triangular candidates are right triangles of the clique's underlying grid
    whose corners all host bends; if one exists but some clique path does not
    bend at a corner, the input violates the corner-bend assumption and is
    reported rather than forced into a subtype.
    """
    idx = sorted(set(clique_vertices))
    paths = tuple(rep.paths[i] for i in idx)
    if not paths:
        raise NotACliqueError("empty clique")
    _check_b1(paths)
    if len(paths) > 1:
        _check_pairwise_clique(paths)

    core = _common_edges(paths)
    if core:
        return EdgeClique(core)

    bend_of = [p.bend_point for p in paths]
    bend_points = {b for b in bend_of if b is not None}
    grid = underlying_grid_of(paths)
    candidates = [
        tri
        for tri in right_triangles_in(grid)
        if all(c in bend_points for c in tri.corners)
    ]
    for tri in candidates:
        if not all(b is not None and b in tri.corners for b in bend_of):
            continue
        by_corner: dict[GridPoint, list[str]] = {c: [] for c in tri.corners}
        for p in paths:
            by_corner[p.bend_point].append(
                path_corner_category(p, tri, p.bend_point)
            )
        subtype = _bullet_rules(by_corner)
        if subtype is not None:
            roles = _corner_role_summary(by_corner)
            return TriangularClique(subtype, roles, tri)

    common = _common_vertices(paths)
    if len(common) == 1:
        return ClawClique(next(iter(common)))
    if candidates:
        raise AssumptionViolatedError(
            "underlying grid has a corner-bent right triangle but not every"
            " clique path bends at a corner"
        )
    raise UnclassifiableError(
        "maximal clique fits no archetype; this indicates a bug"
    )


def _bullet_rules(by_corner: dict[GridPoint, list[str]]) -> str | None:
    """First matching subtype rule over the per-corner role groups."""
    corners = list(by_corner)
    groups = [set(by_corner[c]) for c in corners]

    def exists_assignment(pred) -> bool:
        from itertools import permutations

        return any(pred(*perm) for perm in permutations(groups))

    if all(g == {"I"} for g in groups):
        return "flag"
    if exists_assignment(lambda x, y, z: "M" in x and y == {"I"} and z == {"I"}):
        return "paw"
    if exists_assignment(lambda x, y, z: x == {"I"} and y == {"I"} and "O" in z):
        return "cricket"
    if exists_assignment(lambda x, y, z: "M" in x and "M" in y and z == {"I"}):
        return "bull"
    if exists_assignment(lambda x, y, z: x == {"I"} and "M" in y and "O" in z):
        return "extended-bull"
    if all("M" in g for g in groups):
        return "net"
    return None


def _corner_role_summary(by_corner: dict[GridPoint, list[str]]) -> tuple[str, ...]:
    """One role per corner: O beats M beats I within a corner group."""
    out = []
    for roles in by_corner.values():
        if "O" in roles:
            out.append("O")
        elif "M" in roles:
            out.append("M")
        else:
            out.append("I")
    return tuple(sorted(out))


# -- chordless 4-cycle classes ---------------------------------------------------


@dataclass(frozen=True)
class TruePie:
    center: GridPoint

    def describe(self) -> str:
        return f"true pie at {self.center}"


@dataclass(frozen=True)
class FalsePie:
    center: GridPoint

    def describe(self) -> str:
        return f"false pie at {self.center}"


@dataclass(frozen=True)
class RFrame:
    corners: tuple[GridPoint, GridPoint, GridPoint, GridPoint]

    def describe(self) -> str:
        return "r-frame on " + " ".join(map(repr, self.corners))


@dataclass(frozen=True)
class TFrame:
    corners: tuple[GridPoint, GridPoint, GridPoint, GridPoint]

    def describe(self) -> str:
        return "t-frame on " + " ".join(map(repr, self.corners))


@dataclass(frozen=True)
class PFrame:
    corners: tuple[GridPoint, GridPoint, GridPoint, GridPoint]

    def describe(self) -> str:
        return "p-frame on " + " ".join(map(repr, self.corners))


@dataclass(frozen=True)
class CycleFlag:
    triangle: RightTriangle

    def describe(self) -> str:
        return f"flag on {self.triangle}"


@dataclass(frozen=True)
class Butterfly:
    first: RightTriangle
    second: RightTriangle
    shared_corner: GridPoint

    def describe(self) -> str:
        return f"butterfly {self.first} / {self.second} at {self.shared_corner}"


CycleClass = TruePie | FalsePie | RFrame | TFrame | PFrame | CycleFlag | Butterfly


def _check_chordless_c4(paths: Sequence[LatticePath]) -> None:
    p1, p2, p3, p4 = paths
    ring = ((p1, p2), (p2, p3), (p3, p4), (p4, p1))
    if not all(a.edge_set & b.edge_set for a, b in ring):
        raise NotChordlessC4Error("consecutive paths must share grid edges")
    if (p1.edge_set & p3.edge_set) or (p2.edge_set & p4.edge_set):
        raise NotChordlessC4Error("opposite paths must not share grid edges")


def _pie_class(paths: Sequence[LatticePath]) -> TruePie | FalsePie | None:
    common = _common_vertices(paths)
    if len(common) != 1:
        return None
    b = next(iter(common))
    ray_pairs = []
    for p in paths:
        rays = p.rays_at(b)
        if len(rays) != 2:
            return None  # b must be interior to every path
        ray_pairs.append(frozenset(rays))
    if len(set(ray_pairs)) != 4:
        return None
    all_rays = sorted({r for pair in ray_pairs for r in pair}, key=RAY_ANGLE.get)
    if len(all_rays) != 4:
        return None
    position = {r: i for i, r in enumerate(all_rays)}
    for i in range(4):
        if len(ray_pairs[i] & ray_pairs[(i + 1) % 4]) != 1:
            return None
        if ray_pairs[i] & ray_pairs[(i + 2) % 4]:
            return None
    crossed = False
    for pair in ray_pairs:
        i, j = sorted(position[r] for r in pair)
        if (j - i) % 4 == 2:
            crossed = True
    return FalsePie(b) if crossed else TruePie(b)


def _quad_sides(bends: Sequence[GridPoint]) -> list[Segment] | None:
    """Sides between cyclically consecutive bend points, if each pair is
    joined by one grid direction and consecutive sides change direction."""
    sides = []
    for i in range(4):
        a, b = bends[i], bends[(i + 1) % 4]
        try:
            sides.append(Segment(a, b))
        except Exception:
            return None
    for i in range(4):
        if sides[i].direction == sides[(i + 1) % 4].direction:
            return None
    return sides


def _frame_or_butterfly(
    paths: Sequence[LatticePath], grid: UnderlyingGrid
) -> RFrame | TFrame | PFrame | Butterfly | None:
    bends = [p.bend_point for p in paths]
    if any(b is None for b in bends) or len(set(bends)) != 4:
        return None
    sides = _quad_sides(bends)
    if sides is None:
        return None
    # each consecutive pair must intersect exactly on its side's line
    for i in range(4):
        shared = paths[i].edge_set & paths[(i + 1) % 4].edge_set
        if not all(e.line == sides[i].line for e in shared):
            return None
    dirs = [s.direction for s in sides]
    par02 = dirs[0] == dirs[2]
    par13 = dirs[1] == dirs[3]
    quad = tuple(bends)
    if par02 and par13:
        if set(dirs) == {Direction.HORIZONTAL, Direction.VERTICAL}:
            return RFrame(quad)
        return PFrame(quad)
    # exactly one parallel pair: trapezoid, unless the non-parallel side
    # lines cross inside the hosting grid, which folds it into a butterfly
    j = 0 if par02 else 1  # sides j and j+2 are the parallel pair
    c1, c2 = sides[(j + 1) % 4], sides[(j + 3) % 4]
    meet = line_intersection(c1.line, c2.line)
    if not isinstance(meet, GridPoint) or meet not in grid.points:
        return TFrame(quad)
    t1 = RightTriangle.from_corners((bends[j], bends[(j + 1) % 4], meet))
    t2 = RightTriangle.from_corners((bends[(j + 2) % 4], bends[(j + 3) % 4], meet))
    if t1 is None or t2 is None:
        return None
    if t1.corners & t2.corners != {meet}:
        return None
    return Butterfly(t1, t2, meet)


def _flag_class(
    paths: Sequence[LatticePath], grid: UnderlyingGrid
) -> CycleFlag | None:
    bend_points = {p.bend_point for p in paths if p.bend_point is not None}
    for corners in combinations(sorted(bend_points), 3):
        tri = RightTriangle.from_corners(corners)
        if tri is None or not tri.edges <= grid.edges:
            continue
        per_corner = {
            c: sum(1 for p in paths if p.bend_point == c) for c in tri.corners
        }
        if all(v <= 2 for v in per_corner.values()):
            return CycleFlag(tri)
    return None


def classify_c4(
    p1: LatticePath, p2: LatticePath, p3: LatticePath, p4: LatticePath
) -> CycleClass:
    """Classify four single-bend paths realizing a chordless 4-cycle in the
    cyclic order p1 p2 p3 p4.

    Tests run in a fixed order: hub pies, then bend-corner quadrilaterals
    (rectangle, parallelogram, trapezoid, with the trapezoid folding into a
    butterfly when the crossing point of its slanted sides belongs to the
    underlying grid), then a single right triangle as a flag.
    """
    paths = (p1, p2, p3, p4)
    _check_b1(paths)
    _check_chordless_c4(paths)

    pie = _pie_class(paths)
    if pie is not None:
        return pie

    grid = underlying_grid_of(paths)
    framed = _frame_or_butterfly(paths, grid)
    if framed is not None:
        return framed

    flag = _flag_class(paths, grid)
    if flag is not None:
        return flag

    raise UnclassifiableError(
        "chordless 4-cycle fits no archetype; this indicates a bug"
    )
