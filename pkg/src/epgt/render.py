"""Deterministic SVG rendering of path families in the figure style: one
polyline per path, overlapping co-linear parts drawn with small parallel
offsets, bend points marked. Offsets are presentation only."""

from __future__ import annotations

from .intersect import Representation
from .lattice import Direction, GridEdge

_PALETTE = (
    "#c0392b", "#2980b9", "#27ae60", "#8e44ad", "#d35400",
    "#16a085", "#7f8c8d", "#2c3e50", "#f39c12", "#990066",
)

# screen offset direction perpendicular to each edge direction
_PERP = {
    Direction.HORIZONTAL: (0.0, 1.0),
    Direction.VERTICAL: (1.0, 0.0),
    Direction.DIAGONAL: (0.7, 0.7),
}


def render_svg(
    rep: Representation,
    cell: int = 48,
    margin: int = 36,
    grid: bool = True,
    labels: bool = True,
) -> str:
    """SVG 1.1 document for a path family (grid lines optional)."""
    if rep.paths:
        min_x, min_y, max_x, max_y = rep.bbox
    else:
        min_x = min_y = 0
        max_x = max_y = 1
    min_x -= 1
    min_y -= 1
    max_x += 1
    max_y += 1
    width = (max_x - min_x) * cell + 2 * margin
    height = (max_y - min_y) * cell + 2 * margin

    def sx(x: float) -> float:
        return margin + (x - min_x) * cell

    def sy(y: float) -> float:
        return height - margin - (y - min_y) * cell

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    if grid:
        out.append('<g stroke="#d8d8d8" stroke-width="1">')
        for y in range(min_y, max_y + 1):
            out.append(
                f'<line x1="{sx(min_x)}" y1="{sy(y)}" x2="{sx(max_x)}" y2="{sy(y)}"/>'
            )
        for x in range(min_x, max_x + 1):
            out.append(
                f'<line x1="{sx(x)}" y1="{sy(min_y)}" x2="{sx(x)}" y2="{sy(max_y)}"/>'
            )
        for d in range(min_y - max_x, max_y - min_x + 1):
            # diagonal y = x + d clipped to the box
            x0 = max(min_x, min_y - d)
            x1 = min(max_x, max_y - d)
            if x0 < x1:
                out.append(
                    f'<line x1="{sx(x0)}" y1="{sy(x0 + d)}" '
                    f'x2="{sx(x1)}" y2="{sy(x1 + d)}"/>'
                )
        out.append("</g>")

    # rank of each path among the users of every edge, for parallel offsets
    users: dict[GridEdge, list[int]] = {}
    for i, p in enumerate(rep.paths):
        for e in p.edge_set:
            users.setdefault(e, []).append(i)
    for holders in users.values():
        holders.sort()

    gap = max(2.0, cell * 0.08)
    for i, p in enumerate(rep.paths):
        color = _PALETTE[i % len(_PALETTE)]
        out.append(f'<g stroke="{color}" stroke-width="2.5" fill="none">')
        for e in p.edges:
            holders = users[e]
            rank = holders.index(i)
            off = (rank - (len(holders) - 1) / 2) * gap
            px, py = _PERP[e.direction]
            dx, dy = px * off, -py * off
            out.append(
                f'<line x1="{sx(e.a.x) + dx:.1f}" y1="{sy(e.a.y) + dy:.1f}" '
                f'x2="{sx(e.b.x) + dx:.1f}" y2="{sy(e.b.y) + dy:.1f}"/>'
            )
        out.append("</g>")
        for b in p.bend_points:
            out.append(
                f'<circle cx="{sx(b.x)}" cy="{sy(b.y)}" r="3.5" fill="{color}"/>'
            )
        if labels:
            v0 = p.vertices[0]
            lab = str(rep.labels[i]) if rep.labels is not None else str(i)
            out.append(
                f'<text x="{sx(v0.x) - 14}" y="{sy(v0.y) - 6}" '
                f'font-size="12" fill="{color}">P{lab}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
