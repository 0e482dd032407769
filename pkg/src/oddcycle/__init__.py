"""Exact matching polynomials, skew spectra, and extremal structure for
graphs in which every cycle is odd.

Everything is integer or rational arithmetic end to end: matching profiles
come from a memoized deletion recurrence, roots are isolated with Sturm
sequences and compared as algebraic numbers, and skew characteristic
polynomials are interpolated from fraction-free determinants.
"""

from .graphs import (
    BlockDecomposition,
    Graph,
    Graph6Error,
    GraphTooLargeError,
    LongOddCycleSet,
    automorphism_count,
    block_decomposition,
    complete_graph,
    connected_components,
    cycle_graph,
    disjoint_union,
    is_connected,
    is_isomorphic,
    is_odd_cycle_graph,
    long_odd_cycles,
    parse_edge_list,
    parse_graph6,
    path_graph,
    star_graph,
    write_edge_list,
    write_graph6,
)
from .polynomials import IntPolynomial
from .matching import (
    MatchingProfile,
    check_deletion_identity,
    check_union_identity,
    matching_polynomial,
    matching_profile,
    matching_profile_bruteforce,
    polynomial_from_profile,
)
from .roots import (
    EQ,
    GT,
    LT,
    AlgebraicRoot,
    NoRealRootError,
    compare_roots,
    count_roots_above,
    max_matching_root,
    max_real_root,
    sturm_root_count,
)
from .skew import (
    Orientation,
    all_orientations,
    char_poly_values,
    max_skew_spectral_radius,
    skew_char_poly,
    skew_spectral_radius,
    verify_identity,
)
from .kelmans import (
    DominanceVerdict,
    KelmansPhase,
    KelmansStep,
    ReductionInvariantError,
    ReductionTrace,
    dominance,
    kelmans_transform,
    matching_root_for,
    reduce_to_F,
)
from .extremal import (
    VerificationReport,
    connected_odd_cycle_reps,
    edge_cap,
    enumerate_odd_cycle_graphs,
    labeled_odd_cycle_graphs,
    make_F,
    make_H,
    merge_reports,
    verify_classification,
    verify_conjecture,
    verify_dominance,
    verify_monotonicity,
    verify_oracles,
    verify_radius,
    verify_reduction,
)
from .extremal import verify_identity as verify_identity_sweep

__version__ = "0.1.0"

__all__ = [
    "AlgebraicRoot",
    "BlockDecomposition",
    "DominanceVerdict",
    "EQ",
    "GT",
    "Graph",
    "Graph6Error",
    "GraphTooLargeError",
    "IntPolynomial",
    "KelmansPhase",
    "KelmansStep",
    "LT",
    "LongOddCycleSet",
    "MatchingProfile",
    "NoRealRootError",
    "Orientation",
    "ReductionInvariantError",
    "ReductionTrace",
    "VerificationReport",
    "all_orientations",
    "automorphism_count",
    "block_decomposition",
    "check_deletion_identity",
    "check_union_identity",
    "compare_roots",
    "complete_graph",
    "connected_components",
    "connected_odd_cycle_reps",
    "count_roots_above",
    "cycle_graph",
    "disjoint_union",
    "dominance",
    "edge_cap",
    "enumerate_odd_cycle_graphs",
    "is_connected",
    "is_isomorphic",
    "is_odd_cycle_graph",
    "kelmans_transform",
    "matching_root_for",
    "labeled_odd_cycle_graphs",
    "long_odd_cycles",
    "make_F",
    "make_H",
    "merge_reports",
    "matching_polynomial",
    "matching_profile",
    "matching_profile_bruteforce",
    "max_matching_root",
    "max_real_root",
    "max_skew_spectral_radius",
    "parse_edge_list",
    "parse_graph6",
    "path_graph",
    "polynomial_from_profile",
    "reduce_to_F",
    "char_poly_values",
    "skew_char_poly",
    "skew_spectral_radius",
    "star_graph",
    "sturm_root_count",
    "verify_classification",
    "verify_conjecture",
    "verify_dominance",
    "verify_identity",
    "verify_identity_sweep",
    "verify_monotonicity",
    "verify_oracles",
    "verify_radius",
    "verify_reduction",
    "write_edge_list",
    "write_graph6",
]
