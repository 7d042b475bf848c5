"""Robust clique complexes, total cut complexes and their integral homology."""
from .complex import (
    SimplicialComplex,
    alexander_dual,
    complex_intersection,
    complex_union,
    cone,
    embedded_join,
    full_two_skeleton,
    join,
    minimal_nonfaces,
    robust_clique_complex,
    suspension,
    total_cut_complex,
)
from .errors import InvalidAttachment, OddCycle, RobustCliqError, SizeCapExceeded, UniverseMismatch
from .graph import (
    Bipartition,
    Graph,
    VertexSet,
    bipartition,
    common_neighbors,
    independence_number,
    independent_sets,
    induced_subgraph,
    make_grid,
    maximum_matching,
    minimum_vertex_cover,
)
from .homology import (
    HomologyReport,
    SmithForm,
    boundary_matrices,
    duality_check,
    mod2_betti,
    reduced_homology,
    smith_normal_form,
)
from .sequence import GlueStep, SquareSequence, build_square_sequence, grid_sequence

__version__ = "0.1.0"

__all__ = [
    "alexander_dual",
    "Bipartition",
    "bipartition",
    "boundary_matrices",
    "build_square_sequence",
    "common_neighbors",
    "complex_intersection",
    "complex_union",
    "cone",
    "duality_check",
    "embedded_join",
    "full_two_skeleton",
    "GlueStep",
    "Graph",
    "grid_sequence",
    "HomologyReport",
    "independence_number",
    "independent_sets",
    "induced_subgraph",
    "InvalidAttachment",
    "join",
    "make_grid",
    "maximum_matching",
    "minimal_nonfaces",
    "minimum_vertex_cover",
    "mod2_betti",
    "OddCycle",
    "reduced_homology",
    "robust_clique_complex",
    "RobustCliqError",
    "SimplicialComplex",
    "SizeCapExceeded",
    "smith_normal_form",
    "SmithForm",
    "SquareSequence",
    "suspension",
    "total_cut_complex",
    "UniverseMismatch",
    "VertexSet",
]
