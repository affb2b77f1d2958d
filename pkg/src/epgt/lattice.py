"""Integer triangular-lattice geometry: points, lines, edges, paths, bends.

The grid is the integer lattice with three edge directions: horizontal
(step (1, 0)), vertical (step (0, 1)) and a single diagonal (step (1, 1)).
There is no anti-diagonal: (1, -1) is not a grid step.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Sequence


class NotAdjacentError(ValueError):
    """The two points are not joined by a single grid step."""


class NotOneBendError(ValueError):
    """The operation needs a path with exactly one bend."""


class PathFormatError(ValueError):
    """A path file line could not be parsed."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class GridPoint(tuple):
    """Lattice point (x, y); x is the column, y is the row."""

    __slots__ = ()

    def __new__(cls, x: int, y: int):
        return tuple.__new__(cls, (int(x), int(y)))

    @property
    def x(self) -> int:
        return self[0]

    @property
    def y(self) -> int:
        return self[1]

    def translated(self, dx: int, dy: int) -> GridPoint:
        return GridPoint(self[0] + dx, self[1] + dy)

    def negated(self) -> GridPoint:
        return GridPoint(-self[0], -self[1])

    def __repr__(self) -> str:
        return f"({self[0]},{self[1]})"


class Direction(Enum):
    HORIZONTAL = (1, 0)
    VERTICAL = (0, 1)
    DIAGONAL = (1, 1)

    @property
    def step(self) -> tuple[int, int]:
        return self.value

    @classmethod
    def of_vector(cls, dx: int, dy: int) -> Direction:
        """Direction of a nonzero vector along a grid line, up to sign."""
        if dy == 0 and dx != 0:
            return cls.HORIZONTAL
        if dx == 0 and dy != 0:
            return cls.VERTICAL
        if dx == dy and dx != 0:
            return cls.DIAGONAL
        raise NotAdjacentError(f"vector ({dx},{dy}) is not on a grid line")


# The six unit rays leaving a grid point, with their drawing angle in degrees
# (the diagonal is drawn as the 45-degree ray).
UNIT_RAYS: tuple[tuple[int, int], ...] = (
    (1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1),
)
RAY_ANGLE: dict[tuple[int, int], int] = {
    (1, 0): 0, (1, 1): 45, (0, 1): 90, (-1, 0): 180, (-1, -1): 225, (0, -1): 270,
}


class GridLine(tuple):
    """A full grid line: horizontal y=offset, vertical x=offset, diagonal y-x=offset."""

    __slots__ = ()

    def __new__(cls, direction: Direction, offset: int):
        return tuple.__new__(cls, (direction, int(offset)))

    @property
    def direction(self) -> Direction:
        return self[0]

    @property
    def offset(self) -> int:
        return self[1]

    @classmethod
    def through(cls, p: GridPoint, direction: Direction) -> GridLine:
        if direction is Direction.HORIZONTAL:
            return cls(direction, p.y)
        if direction is Direction.VERTICAL:
            return cls(direction, p.x)
        return cls(direction, p.y - p.x)

    def contains(self, p: GridPoint) -> bool:
        if self.direction is Direction.HORIZONTAL:
            return p.y == self.offset
        if self.direction is Direction.VERTICAL:
            return p.x == self.offset
        return p.y - p.x == self.offset

    def position(self, p: GridPoint) -> int:
        """Scalar coordinate of a point along this line (x for H and D, y for V)."""
        if self.direction is Direction.VERTICAL:
            return p.y
        return p.x

    def point_at(self, pos: int) -> GridPoint:
        if self.direction is Direction.HORIZONTAL:
            return GridPoint(pos, self.offset)
        if self.direction is Direction.VERTICAL:
            return GridPoint(self.offset, pos)
        return GridPoint(pos, self.offset + pos)

    def __repr__(self) -> str:
        sym = {"HORIZONTAL": "H", "VERTICAL": "V", "DIAGONAL": "D"}[self.direction.name]
        return f"{sym}[{self.offset}]"


def line_intersection(l1: GridLine, l2: GridLine) -> GridPoint | GridLine | None:
    """Common locus of two grid lines.

    Returns the line itself when the lines are identical, ``None`` when they
    are parallel and distinct, and the unique common lattice point otherwise.
    """
    if l1 == l2:
        return l1
    if l1.direction == l2.direction:
        return None
    by_dir = {l1.direction: l1.offset, l2.direction: l2.offset}
    if Direction.HORIZONTAL in by_dir and Direction.VERTICAL in by_dir:
        return GridPoint(by_dir[Direction.VERTICAL], by_dir[Direction.HORIZONTAL])
    if Direction.HORIZONTAL in by_dir and Direction.DIAGONAL in by_dir:
        c, d = by_dir[Direction.HORIZONTAL], by_dir[Direction.DIAGONAL]
        return GridPoint(c - d, c)
    a, d = by_dir[Direction.VERTICAL], by_dir[Direction.DIAGONAL]
    return GridPoint(a, a + d)


@dataclass(frozen=True)
class GridEdge:
    """Unit grid edge; endpoints stored with the lexicographically smaller first."""

    a: GridPoint
    b: GridPoint

    def __post_init__(self):
        a = GridPoint(*self.a)
        b = GridPoint(*self.b)
        if b < a:
            a, b = b, a
        d = (b.x - a.x, b.y - a.y)
        if d not in ((1, 0), (0, 1), (1, 1)):
            raise NotAdjacentError(f"{a} and {b} are not grid-adjacent")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def direction(self) -> Direction:
        return Direction.of_vector(self.b.x - self.a.x, self.b.y - self.a.y)

    @property
    def line(self) -> GridLine:
        return GridLine.through(self.a, self.direction)

    def translated(self, dx: int, dy: int) -> GridEdge:
        return GridEdge(self.a.translated(dx, dy), self.b.translated(dx, dy))

    def __repr__(self) -> str:
        return f"[{self.a}-{self.b}]"


def edge_between(p: GridPoint | tuple, q: GridPoint | tuple) -> GridEdge:
    """The grid edge joining two adjacent points; NotAdjacentError otherwise."""
    return GridEdge(GridPoint(*p), GridPoint(*q))


@dataclass(frozen=True)
class Segment:
    """Maximal straight run on one grid line, endpoints canonically ordered."""

    a: GridPoint
    b: GridPoint

    def __post_init__(self):
        a = GridPoint(*self.a)
        b = GridPoint(*self.b)
        if b < a:
            a, b = b, a
        Direction.of_vector(b.x - a.x, b.y - a.y)  # raises if not on a line
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def direction(self) -> Direction:
        return Direction.of_vector(self.b.x - self.a.x, self.b.y - self.a.y)

    @cached_property
    def line(self) -> GridLine:
        return GridLine.through(self.a, self.direction)

    @property
    def length(self) -> int:
        """Number of unit edges."""
        return self.line.position(self.b) - self.line.position(self.a)

    @property
    def interval(self) -> tuple[int, int]:
        """(lo, hi) scalar positions of the endpoints along the line."""
        return self.line.position(self.a), self.line.position(self.b)

    @cached_property
    def points(self) -> tuple[GridPoint, ...]:
        lo, hi = self.interval
        return tuple(self.line.point_at(t) for t in range(lo, hi + 1))

    @cached_property
    def edges(self) -> frozenset[GridEdge]:
        pts = self.points
        return frozenset(GridEdge(p, q) for p, q in zip(pts, pts[1:]))

    def contains_point(self, p: GridPoint) -> bool:
        if not self.line.contains(p):
            return False
        lo, hi = self.interval
        return lo <= self.line.position(p) <= hi

    def contains_segment(self, other: Segment) -> bool:
        if self.line != other.line:
            return False
        lo, hi = self.interval
        olo, ohi = other.interval
        return lo <= olo and ohi <= hi

    def translated(self, dx: int, dy: int) -> Segment:
        return Segment(self.a.translated(dx, dy), self.b.translated(dx, dy))

    def __repr__(self) -> str:
        return f"Seg({self.a}-{self.b})"


class BendShape(tuple):
    """A bend point together with the two unit rays leaving it along the path."""

    __slots__ = ()

    def __new__(cls, bend: GridPoint, arms: Iterable[tuple[int, int]]):
        return tuple.__new__(cls, (GridPoint(*bend), frozenset(arms)))

    @property
    def bend(self) -> GridPoint:
        return self[0]

    @property
    def arms(self) -> frozenset:
        return self[1]

    @property
    def angle_class(self) -> str:
        """narrow (45 degrees), normal (90) or wide (135)."""
        a1, a2 = sorted(self.arms)
        diff = abs(RAY_ANGLE[a1] - RAY_ANGLE[a2])
        diff = min(diff, 360 - diff)
        return {45: "narrow", 90: "normal", 135: "wide"}[diff]


def all_bend_shapes() -> list[frozenset]:
    """The 12 unordered arm pairs that form a bend (not equal, not opposite)."""
    out = []
    for i, r in enumerate(UNIT_RAYS):
        for s in UNIT_RAYS[i + 1:]:
            if (r[0] + s[0], r[1] + s[1]) == (0, 0):
                continue
            out.append(frozenset((r, s)))
    return out


@dataclass(frozen=True)
class LatticePath:
    """Simple nontrivial path along grid lines, stored as its full vertex chain.

    The chain is canonicalized so the lexicographically smaller endpoint
    comes first; reversing the input yields an equal value.
    """

    vertices: tuple[GridPoint, ...]

    def __post_init__(self):
        pts = tuple(GridPoint(*v) for v in self.vertices)
        if len(pts) < 2:
            raise ValueError("a path needs at least two vertices")
        if len(set(pts)) != len(pts):
            raise ValueError(f"path revisits a vertex: {pts}")
        for p, q in zip(pts, pts[1:]):
            d = (q.x - p.x, q.y - p.y)
            if d not in RAY_ANGLE:
                raise NotAdjacentError(f"consecutive points {p} and {q} are not adjacent")
        if pts[-1] < pts[0]:
            pts = pts[::-1]
        object.__setattr__(self, "vertices", pts)

    # -- derived structure -------------------------------------------------

    @cached_property
    def steps(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (q.x - p.x, q.y - p.y) for p, q in zip(self.vertices, self.vertices[1:])
        )

    @cached_property
    def edges(self) -> tuple[GridEdge, ...]:
        return tuple(GridEdge(p, q) for p, q in zip(self.vertices, self.vertices[1:]))

    @cached_property
    def edge_set(self) -> frozenset[GridEdge]:
        return frozenset(self.edges)

    @cached_property
    def vertex_set(self) -> frozenset[GridPoint]:
        return frozenset(self.vertices)

    @cached_property
    def bend_points(self) -> tuple[GridPoint, ...]:
        out = []
        for i in range(1, len(self.vertices) - 1):
            if self.steps[i - 1] != self.steps[i]:
                out.append(self.vertices[i])
        return tuple(out)

    @property
    def bend_count(self) -> int:
        return len(self.bend_points)

    @property
    def bend_point(self) -> GridPoint | None:
        """The bend of a single-bend path, None for a straight path."""
        if self.bend_count == 1:
            return self.bend_points[0]
        if self.bend_count == 0:
            return None
        raise NotOneBendError(f"path has {self.bend_count} bends")

    @cached_property
    def segments(self) -> tuple[Segment, ...]:
        cuts = [0]
        for i in range(1, len(self.vertices) - 1):
            if self.steps[i - 1] != self.steps[i]:
                cuts.append(i)
        cuts.append(len(self.vertices) - 1)
        return tuple(
            Segment(self.vertices[i], self.vertices[j]) for i, j in zip(cuts, cuts[1:])
        )

    @cached_property
    def lines(self) -> frozenset[GridLine]:
        return frozenset(s.line for s in self.segments)

    @property
    def endpoints(self) -> tuple[GridPoint, GridPoint]:
        return self.vertices[0], self.vertices[-1]

    @cached_property
    def bbox(self) -> tuple[int, int, int, int]:
        """(min_x, min_y, max_x, max_y)."""
        xs = [p.x for p in self.vertices]
        ys = [p.y for p in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    # -- queries -----------------------------------------------------------

    def is_bk(self, k: int) -> bool:
        return self.bend_count <= k

    def bend_shape(self) -> BendShape:
        if self.bend_count != 1:
            raise NotOneBendError(f"path has {self.bend_count} bends, need exactly 1")
        b = self.bend_points[0]
        i = self.vertices.index(b)
        arms = (
            (self.vertices[i - 1].x - b.x, self.vertices[i - 1].y - b.y),
            (self.vertices[i + 1].x - b.x, self.vertices[i + 1].y - b.y),
        )
        return BendShape(b, arms)

    def segment_in_direction(self, direction: Direction) -> Segment | None:
        for s in self.segments:
            if s.direction is direction:
                return s
        return None

    def rays_at(self, p: GridPoint) -> tuple[tuple[int, int], ...]:
        """Unit steps leaving p along the path (2 if interior, 1 if endpoint)."""
        i = self.vertices.index(p)
        rays = []
        if i > 0:
            q = self.vertices[i - 1]
            rays.append((q.x - p.x, q.y - p.y))
        if i < len(self.vertices) - 1:
            q = self.vertices[i + 1]
            rays.append((q.x - p.x, q.y - p.y))
        return tuple(rays)

    def translated(self, dx: int, dy: int) -> LatticePath:
        return LatticePath(tuple(p.translated(dx, dy) for p in self.vertices))

    def double_flipped(self) -> LatticePath:
        """Simultaneous horizontal and vertical reflection (point reflection)."""
        return LatticePath(tuple(p.negated() for p in self.vertices))

    def __repr__(self) -> str:
        return "Path[" + " ".join(repr(p) for p in self.vertices) + "]"


def path(*points: tuple[int, int]) -> LatticePath:
    """Convenience constructor from bare coordinate pairs."""
    return LatticePath(tuple(GridPoint(*p) for p in points))


def bend_count(p: LatticePath) -> int:
    return p.bend_count


def is_bk(p: LatticePath, k: int) -> bool:
    return p.is_bk(k)


def segments(p: LatticePath) -> tuple[Segment, ...]:
    return p.segments


def bend_shape(p: LatticePath) -> BendShape:
    return p.bend_shape()


# -- path file format --------------------------------------------------------
#
# One path per line:  P<id>: (x1,y1) (x2,y2) ... (xn,yn)
# Blank lines and lines starting with '#' are ignored.

_PATH_LINE = re.compile(r"^\s*P(?P<id>\S+)\s*:\s*(?P<rest>.*?)\s*$")
_POINT = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


def parse_paths(text: str) -> list[tuple[str, LatticePath]]:
    """Parse the path file format, returning (id, path) pairs in file order."""
    out: list[tuple[str, LatticePath]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = _PATH_LINE.match(line)
        if not m:
            raise PathFormatError(line_no, f"cannot parse {line!r}")
        body = m.group("rest")
        pts = [GridPoint(int(a), int(b)) for a, b in _POINT.findall(body)]
        stripped = _POINT.sub("", body).replace(" ", "")
        if stripped:
            raise PathFormatError(line_no, f"unexpected tokens {stripped!r}")
        if len(pts) < 2:
            raise PathFormatError(line_no, "a path needs at least two vertices")
        try:
            p = LatticePath(tuple(pts))
        except (NotAdjacentError, ValueError) as exc:
            raise PathFormatError(line_no, str(exc)) from exc
        out.append((m.group("id"), p))
    return out


def format_paths(paths: Sequence[LatticePath], ids: Sequence[str] | None = None) -> str:
    """Serialize paths in the path file format (ids default to 0..n-1)."""
    if ids is None:
        ids = [str(i) for i in range(len(paths))]
    lines = []
    for pid, p in zip(ids, paths):
        lines.append(f"P{pid}: " + " ".join(repr(v) for v in p.vertices))
    return "\n".join(lines) + "\n"
