"""SIG dimension of trees under the L-infinity metric.

Exact constructions of sphere-of-influence-graph representations, a
first-principles SIG oracle, and a mechanical audit of the geometry.
"""

__version__ = "0.1.0"

from .audit import AuditReport, audit
from .embedding import Placement, Representation, embed, embed_star, target_dimension
from .errors import (
    DimensionMismatch,
    DuplicatePoints,
    InternalInvariantViolation,
    InvalidParam,
    NotACorner,
    NotATree,
    ParseError,
    SigdimError,
)
from .geometry import Box, box_intersection_volume, boxes_intersect_open, linf_distance
from .kernels import BACKEND
from .sig import (
    DimensionReport,
    PointSet,
    bounds_for_beta,
    dimension_bounds,
    is_sig_representation,
    nearest_neighbor_radii,
    sig_graph,
)
from .tree import (
    LeafStats,
    RootedTree,
    Tree,
    build_special_rooted_tree,
    gen_caterpillar,
    gen_h_graph,
    gen_path,
    gen_random_tree,
    gen_star,
    leaf_stats,
    parse_edge_list,
)

__all__ = [
    "AuditReport", "BACKEND", "Box", "DimensionMismatch", "DimensionReport", "DuplicatePoints",
    "InternalInvariantViolation", "InvalidParam", "LeafStats", "NotACorner", "NotATree",
    "ParseError", "Placement", "PointSet", "Representation", "RootedTree", "SigdimError", "Tree",
    "audit", "bounds_for_beta", "box_intersection_volume", "boxes_intersect_open",
    "build_special_rooted_tree", "dimension_bounds", "embed", "embed_star",
    "gen_caterpillar", "gen_h_graph", "gen_path", "gen_random_tree", "gen_star",
    "is_sig_representation", "leaf_stats", "linf_distance", "nearest_neighbor_radii", "parse_edge_list",
    "sig_graph", "target_dimension",
]
