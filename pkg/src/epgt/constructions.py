"""Explicit path families: k-suns, K_{2,n} (n <= 6), the claw witness, a
gallery of clique and 4-cycle archetypes, and a seeded random family generator.
"""

from __future__ import annotations

import random

from .graphs import BadParameterError
from .intersect import Representation
from .lattice import GridPoint, LatticePath, UNIT_RAYS


def _run(start: tuple[int, int], ray: tuple[int, int], steps: int) -> list[GridPoint]:
    """Vertices of a straight run from start, excluding the start itself."""
    x, y = start
    out = []
    for _ in range(steps):
        x, y = x + ray[0], y + ray[1]
        out.append(GridPoint(x, y))
    return out


def _bent(start: tuple[int, int], ray1: tuple[int, int], n1: int,
          ray2: tuple[int, int], n2: int) -> LatticePath:
    pts = [GridPoint(*start)]
    pts += _run(tuple(pts[-1]), ray1, n1)
    pts += _run(tuple(pts[-1]), ray2, n2)
    return LatticePath(tuple(pts))


def sun_representation(k: int) -> Representation:
    """Labeled single-bend representation of the k-sun on 3 rows.

    The inner-clique paths all run through row 3 and share the edge
    ((2,3),(3,3)); odd-indexed ones drop to row 1 along the diagonal, even
    ones drop vertically. Each outer path is a short two-edge hook gluing
    consecutive clique paths. Fits 3 x ceil((k+4)/2) rows x columns.
    """
    if k < 4:
        raise BadParameterError("sun representations need k >= 4")
    clique: list[LatticePath] = []
    outer: list[LatticePath] = []

    # v_1: extreme points (1,3) and (2,2), bending at (3,3)
    clique.append(LatticePath((
        GridPoint(1, 3), GridPoint(2, 3), GridPoint(3, 3), GridPoint(2, 2),
    )))
    for i in range(2, k + 1):
        start_x = 1 if i == k else 2  # v_k is stretched to (1,3)
        if i % 2 == 1:
            bx = (i + 5) // 2
            pts = [GridPoint(x, 3) for x in range(start_x, bx + 1)]
            pts += _run((bx, 3), (-1, -1), 2)
            clique.append(LatticePath(tuple(pts)))
        else:
            bx = (i + 4) // 2
            pts = [GridPoint(x, 3) for x in range(start_x, bx + 1)]
            pts += _run((bx, 3), (0, -1), 2)
            clique.append(LatticePath(tuple(pts)))
    for i in range(1, k):
        if i % 2 == 1:
            x0 = (i + 3) // 2
            outer.append(LatticePath((
                GridPoint(x0, 2), GridPoint(x0 + 1, 3), GridPoint(x0 + 1, 2),
            )))
        else:
            x0 = (i + 2) // 2
            outer.append(LatticePath((
                GridPoint(x0, 1), GridPoint(x0 + 1, 2), GridPoint(x0 + 1, 1),
            )))
    # s_k: the single horizontal edge from (1,3) to (2,3)
    outer.append(LatticePath((GridPoint(1, 3), GridPoint(2, 3))))
    paths = tuple(clique + outer)
    return Representation(paths, tuple(range(2 * k)))


def claw_witness() -> Representation:
    """Three single-bend paths that pairwise share an edge at the hub (1,1)
    but have no common edge: a minimal family that is 2-intersecting with an
    empty core."""
    return Representation((
        LatticePath((GridPoint(0, 1), GridPoint(1, 1), GridPoint(1, 2))),
        LatticePath((GridPoint(1, 2), GridPoint(1, 1), GridPoint(2, 2))),
        LatticePath((GridPoint(2, 2), GridPoint(1, 1), GridPoint(0, 1))),
    ))


# Frozen coordinates for the two-hub construction behind K_{2,n}, n <= 6,
# found once by bounded exhaustive search over a 6x6 window and validated in
# the test suite. Path order: hub, hub, then six pairwise edge-disjoint legs.
_K26_CHAINS: tuple[tuple[tuple[int, int], ...], ...] = (
    ((0, 2), (1, 3), (2, 4), (3, 5), (3, 4), (3, 3), (3, 2), (3, 1), (3, 0)),
    ((0, 3), (1, 3), (2, 3), (3, 3), (4, 3), (5, 3), (4, 2), (3, 1), (2, 0)),
    ((3, 5), (3, 4), (3, 3), (4, 3), (5, 3)),
    ((0, 3), (1, 3), (2, 4), (3, 5)),
    ((3, 0), (3, 1), (4, 2), (5, 3)),
    ((0, 2), (1, 3), (2, 3)),
    ((2, 0), (3, 1), (3, 2)),
    ((2, 3), (3, 3), (3, 2)),
)


def k2n_representation(n: int) -> Representation:
    """Labeled single-bend representation of K_{2,n} for 1 <= n <= 6.

    n = 7 is refused: no family of single-bend paths on this grid gives two
    hubs seven pairwise edge-disjoint common neighbors.
    """
    if n >= 7:
        raise BadParameterError(
            "K_{2,n} has single-bend representations on the triangular grid"
            " only for n <= 6"
        )
    if n < 1:
        raise BadParameterError("K_{2,n} needs n >= 1")
    if not _K26_CHAINS:
        raise RuntimeError("frozen K_{2,6} coordinates missing")
    chains = _K26_CHAINS[:2] + _K26_CHAINS[2:2 + n]
    paths = tuple(LatticePath(tuple(GridPoint(*p) for p in c)) for c in chains)
    return Representation(paths, tuple(range(n + 2)))


_GALLERY: dict[str, tuple[tuple[tuple[int, int], ...], ...]] = {
    # cliques of three paths
    "edge": (
        ((0, 0), (1, 0), (2, 0)),
        ((0, 0), (1, 0)),
        ((1, 0), (0, 0), (0, 1)),
    ),
    "claw": (
        ((0, 1), (1, 1), (1, 2)),
        ((1, 2), (1, 1), (2, 2)),
        ((2, 2), (1, 1), (0, 1)),
    ),
    "flag": (
        ((2, 0), (1, 0), (0, 0), (1, 1), (2, 2)),
        ((1, 0), (2, 0), (2, 1), (2, 2)),
        ((2, 1), (2, 2), (1, 1), (0, 0)),
    ),
    "paw": (
        ((2, 0), (1, 0), (0, 0), (1, 1), (2, 2)),
        ((1, 0), (2, 0), (2, 1), (2, 2), (2, 3)),
        ((1, 1), (2, 2), (2, 3)),
    ),
    "cricket": (
        ((2, 0), (1, 0), (0, 0), (1, 1), (2, 2), (3, 3)),
        ((1, 0), (2, 0), (2, 1), (2, 2), (2, 3)),
        ((2, 3), (2, 2), (3, 3)),
    ),
    "bull": (
        ((0, 0), (1, 1), (2, 1), (3, 1), (4, 1)),
        ((4, 1), (3, 1), (3, 2), (3, 3)),
        ((3, 2), (3, 3), (2, 2), (1, 1), (0, 0)),
    ),
    "extended-bull": (
        ((3, 0), (2, 0), (1, 0), (0, 0), (1, 1), (2, 2), (3, 3)),
        ((3, 0), (2, 0), (2, 1), (2, 2), (2, 3)),
        ((2, 3), (2, 2), (3, 3)),
    ),
    "net": (
        ((0, 0), (1, 1), (2, 1), (3, 1), (4, 1)),
        ((4, 1), (3, 1), (3, 2), (3, 3), (3, 4)),
        ((3, 4), (3, 3), (2, 2), (1, 1), (0, 0)),
    ),
    # chordless 4-cycles, in cyclic order
    "truepie": (
        ((2, 1), (1, 1), (1, 2)),
        ((1, 2), (1, 1), (0, 1)),
        ((0, 1), (1, 1), (1, 0)),
        ((1, 0), (1, 1), (2, 1)),
    ),
    "falsepie": (
        ((2, 1), (1, 1), (1, 2)),
        ((1, 0), (1, 1), (1, 2)),
        ((1, 0), (1, 1), (0, 1)),
        ((0, 1), (1, 1), (2, 1)),
    ),
    "rframe": (
        ((0, 1), (0, 0), (1, 0), (2, 0)),
        ((1, 0), (2, 0), (2, 1), (2, 2)),
        ((2, 1), (2, 2), (1, 2), (0, 2)),
        ((1, 2), (0, 2), (0, 1), (0, 0)),
    ),
    "tframe": (
        ((0, 1), (0, 0), (1, 0), (2, 0)),
        ((1, 0), (2, 0), (3, 1)),
        ((2, 0), (3, 1), (2, 1), (1, 1)),
        ((0, 0), (0, 1), (1, 1), (2, 1)),
    ),
    "pframe": (
        ((1, 1), (0, 0), (1, 0), (2, 0)),
        ((1, 0), (2, 0), (3, 1)),
        ((2, 0), (3, 1), (2, 1)),
        ((0, 0), (1, 1), (2, 1), (3, 1)),
    ),
    "c4flag": (
        ((0, 1), (1, 1), (2, 1), (3, 1)),
        ((0, 1), (1, 1), (1, 2), (1, 3)),
        ((1, 2), (1, 1), (1, 0), (2, 1), (3, 2)),
        ((3, 1), (2, 1), (3, 2)),
    ),
    "butterfly": (
        ((0, 0), (0, 1), (0, 2), (1, 2), (2, 2), (3, 2)),
        ((1, 2), (2, 2), (3, 2), (4, 2), (4, 3), (4, 4)),
        ((4, 2), (4, 3), (4, 4), (3, 3), (2, 2), (1, 1)),
        ((0, 2), (0, 1), (0, 0), (1, 1), (2, 2), (3, 3)),
    ),
}

GALLERY_CLIQUE_NAMES = (
    "edge", "claw", "flag", "paw", "cricket", "bull", "extended-bull", "net",
)
GALLERY_CYCLE_NAMES = (
    "truepie", "falsepie", "rframe", "tframe", "pframe", "c4flag", "butterfly",
)


class UnknownSubtypeError(ValueError):
    pass


def gallery(subtype: str) -> Representation:
    """Hand-built instance realizing the named clique or 4-cycle archetype;
    the classifiers re-derive each one in the test suite."""
    key = subtype.lower()
    if key not in _GALLERY:
        known = ", ".join(sorted(_GALLERY))
        raise UnknownSubtypeError(f"unknown subtype {subtype!r} (known: {known})")
    chains = _GALLERY[key]
    return Representation(
        tuple(LatticePath(tuple(GridPoint(*p) for p in c)) for c in chains)
    )


def random_b1_family(
    count: int, width: int, height: int, seed: int
) -> Representation:
    """Deterministic-for-seed family of distinct 0- and 1-bend paths inside a
    width x height point window."""
    if count < 1:
        raise BadParameterError("need at least one path")
    if width * height > 144:
        raise BadParameterError("random families support windows up to 12x12 points")
    rng = random.Random(seed)
    straight_rays = ((1, 0), (0, 1), (1, 1))

    def fits(x: int, y: int) -> bool:
        return 0 <= x < width and 0 <= y < height

    chosen: list[LatticePath] = []
    seen: set[LatticePath] = set()
    attempts = 0
    limit = 300 * count + 2000
    while len(chosen) < count:
        attempts += 1
        if attempts > limit:
            raise BadParameterError(
                f"window {width}x{height} too small for {count} distinct paths"
            )
        x = rng.randrange(width)
        y = rng.randrange(height)
        if rng.random() < 0.3:  # straight path
            ray = straight_rays[rng.randrange(3)]
            length = rng.randint(1, max(width, height))
            pts = [GridPoint(x, y)] + _run((x, y), ray, length)
        else:
            arms = rng.sample(UNIT_RAYS, 2)
            if (arms[0][0] + arms[1][0], arms[0][1] + arms[1][1]) == (0, 0):
                continue  # opposite rays make a straight path, resample
            n1 = rng.randint(1, max(width, height))
            n2 = rng.randint(1, max(width, height))
            pts = list(reversed(_run((x, y), arms[0], n1))) + [GridPoint(x, y)]
            pts += _run((x, y), arms[1], n2)
        if not all(fits(p.x, p.y) for p in pts):
            continue
        p = LatticePath(tuple(pts))
        if p in seen:
            continue
        seen.add(p)
        chosen.append(p)
    return Representation(tuple(chosen))
