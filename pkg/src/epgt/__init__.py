"""Edge-intersection graphs of paths on a triangular grid.

Construct, validate, classify, clique-color and exhaustively search
single-bend path representations on the integer lattice with one diagonal.
"""

from .lattice import (
    BendShape,
    Direction,
    GridEdge,
    GridLine,
    GridPoint,
    LatticePath,
    Segment,
    edge_between,
    line_intersection,
    parse_paths,
    format_paths,
    path,
)
from .graphs import (
    SimpleGraph,
    maximal_cliques,
    chordless_4cycles,
    is_isomorphic,
    find_isomorphism,
    catalog,
)
from .intersect import (
    Representation,
    UnderlyingGrid,
    edge_intersection,
    vertex_intersection,
    intersection_graph,
    underlying_grid,
    validate,
    pair_property_suite,
)
from .classify import (
    classify_triangle,
    classify_maximal_clique,
    classify_c4,
    path_corner_category,
    RightTriangle,
)
from .constructions import (
    sun_representation,
    k2n_representation,
    claw_witness,
    gallery,
    random_b1_family,
)
from .helly import (
    core_edges,
    is_h_intersecting,
    strong_helly_equals,
    helly_violation_search,
    bend_forcing_checks,
)
from .coloring import (
    clique_color,
    initial_colors,
    verify_clique_coloring,
    two_clique_color_line,
)
from .search import SearchBounds, enumerate_paths, find_representation, k27_counting_check
from .render import render_svg

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
