"""Graph dot product: permutation-maximised signed traces and the geometry they induce."""

from .coords import (
    Basis,
    BasisReport,
    ClusterPartition,
    Coordinates,
    cluster,
    coordinates,
    greedy_basis,
    similarity_rank,
    subgraph_census_coords,
    verify_basis,
)
from .engine import (
    DotResult,
    contains_induced,
    count_induced,
    dot,
    dot_bnb,
    dot_cross_order,
    dot_exhaustive,
    dot_table,
    is_orthogonal,
    metric,
    norm,
    norm_dot,
    phase,
    quasi_orthogonality_scan,
    squared_norm,
    weighted_dot,
)
from .errors import GraphDotError, GraphParseError, GuardExceeded, OrderMismatch
from .formats import parse_graph6, read_graphs, write_graph6
from .graph import Graph, Permutation, SignMatrix, complement, sign_matrix
from .iso import IsoClassCatalog, automorphism_count, canonical_form, enumerate_iso_classes, is_isomorphic
from .special import dot_bounded_order, dot_clique_split, dot_star

__version__ = "0.1.0"
