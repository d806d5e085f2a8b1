"""wordnerve: words, graphs, and nerves of colored moment-curve point sets.

Library layout:

* graphs    -- simple graphs and simplicial complexes
* words     -- alternation semantics and induced graphs
* encode    -- graph/word/chord-diagram/polygon-arrangement encoders
* search    -- bounded exhaustive search for word representants
* geometry  -- exact rational geometry (moment curve, Gale, Breen, LP)
* nerve     -- colored configurations, nerve complexes, extensions
* formats   -- stable text/JSON formats
* svgplot   -- deterministic SVG rendering (2D)
* cli       -- the `wordnerve` command
"""

from .graphs import (
    Graph,
    GraphError,
    SimplicialComplex,
    ComplexError,
    bipartition,
    complex_from_faces,
    from_edge_list,
    graph_as_complex,
    is_triangle_free,
    one_skeleton,
)
from .words import (
    Word,
    WordError,
    induced_graph_classic,
    induced_graph_general,
    is_d_intersecting,
    is_k_uniform,
    max_alternation,
    rotate,
    word,
)
from .encode import (
    ChordDiagram,
    PolygonArrangement,
    bipartite_layout,
    chord_intersection_graph,
    polygon_arrangement_from_word,
    word_any_graph,
    word_bipartite,
    word_from_chord_diagram,
    word_from_polygon_arrangement,
)
from .geometry import (
    GeometryError,
    Hyperplane,
    MomentConfig,
    breen_intersect,
    convex_position_subset_2d,
    gale_facets,
    hulls_intersect,
    hyperplane_through_moment_points,
    moment_config,
    moment_point,
    orientation,
    point,
    rational,
)
from .search import (
    SearchBudget,
    SearchError,
    SearchVerdict,
    find_general_word,
    general_rep_number_bounded,
    gr_upper_bound,
)
from .nerve import (
    ColoredConfig,
    DegenerateInputError,
    ExtensionError,
    NerveResult,
    extend_coloring_2d,
    extend_coloring_bipartite,
    nerve,
    realize_on_moment_curve,
    verify_partition_induced,
)

__version__ = "0.1.0"
