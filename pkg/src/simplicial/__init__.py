"""Finite simplicial complexes: structure, classification, certified checks."""

__version__ = "0.1.0"

from .core import (
    DEFAULT_CANDIDATE_CAP,
    BoundRow,
    FaceBoundsReport,
    FVector,
    HVector,
    SimplicialComplex,
    StrongComponents,
    Verdict,
    build_complex,
    check_face_lower_bounds,
    join,
)
from .errors import (
    ClassificationError,
    InputError,
    InternalInvariantError,
    ResourceLimitError,
    SimplicialError,
)
from .formats import (
    edge_list_text,
    facet_file_text,
    parse_edge_list,
    parse_facet_lines,
    read_complex_file,
    read_complex_text,
)
from .generators import (
    barycentric_subdivision,
    cross_polytope_boundary,
    cycle,
    icosahedron,
    is_isomorphic,
    simplex_boundary,
    suspension,
    torus_7,
)
from .graphs import (
    CutCertificate,
    ConnectivityResult,
    Graph,
    SubdivisionEmbedding,
    Walk,
    WalkCertificate,
    face_adjacency_graph,
    graph_of,
    is_m_connected,
    loop_erased,
    strong_chain_avoiding,
    strong_walk_avoiding,
    verify_strong_walk,
    verify_subdivision,
    vertex_connectivity,
)
from .homology import (
    GF2,
    GF3,
    RATIONALS,
    BettiTable,
    FieldSpec,
    boundary_matrix,
    is_cohen_macaulay,
    is_homology_manifold,
    is_homology_sphere,
    is_m_cohen_macaulay,
    reduced_betti_numbers,
)
from .theorems import (
    HypothesisCheck,
    TheoremReport,
    check_cross_polytope_subdivision,
    check_face_graph_connectivity_bound,
    check_face_lower_bounds_report,
    check_graph_connectivity_bound,
    check_h_vector_bound,
    cross_polytope_graph,
    cross_polytope_subdivision,
    strong_walk_avoiding_set,
)

__all__ = [
    "__version__",
    "BettiTable",
    "BoundRow",
    "ClassificationError",
    "ConnectivityResult",
    "CutCertificate",
    "DEFAULT_CANDIDATE_CAP",
    "FaceBoundsReport",
    "FieldSpec",
    "FVector",
    "GF2",
    "GF3",
    "Graph",
    "HVector",
    "HypothesisCheck",
    "InputError",
    "InternalInvariantError",
    "RATIONALS",
    "ResourceLimitError",
    "SimplicialComplex",
    "SimplicialError",
    "StrongComponents",
    "SubdivisionEmbedding",
    "TheoremReport",
    "Verdict",
    "Walk",
    "WalkCertificate",
    "barycentric_subdivision",
    "boundary_matrix",
    "build_complex",
    "check_cross_polytope_subdivision",
    "check_face_graph_connectivity_bound",
    "check_face_lower_bounds_report",
    "check_face_lower_bounds",
    "check_graph_connectivity_bound",
    "check_h_vector_bound",
    "cross_polytope_boundary",
    "cross_polytope_graph",
    "cross_polytope_subdivision",
    "cycle",
    "edge_list_text",
    "face_adjacency_graph",
    "facet_file_text",
    "graph_of",
    "icosahedron",
    "is_cohen_macaulay",
    "is_homology_manifold",
    "is_homology_sphere",
    "is_isomorphic",
    "is_m_cohen_macaulay",
    "is_m_connected",
    "join",
    "loop_erased",
    "parse_edge_list",
    "parse_facet_lines",
    "read_complex_file",
    "read_complex_text",
    "reduced_betti_numbers",
    "simplex_boundary",
    "strong_chain_avoiding",
    "strong_walk_avoiding",
    "strong_walk_avoiding_set",
    "suspension",
    "torus_7",
    "verify_strong_walk",
    "verify_subdivision",
    "vertex_connectivity",
]
