"""Exact matching polynomials, Gallai-Edmonds theta-partitions, and minimum
path covers of trees, with machine verification of the cover/multiplicity
biconditional."""

from .exactalg import (
    AlgebraicRootClass,
    FactoredPoly,
    IntPoly,
    NumberFieldElem,
    RealRootInterval,
    factor_irreducible,
    isolate_real_roots,
    kernel_basis,
    nf_div,
    root_multiplicity,
    squarefree_decompose,
)
from .graphs import Graph, builtin, enumerate_trees, load_graph, path_graph, star_graph
from .matchcore import (
    MatchCounts,
    check_identities,
    matching_counts,
    matching_polynomial,
    matching_polynomial_recurrence,
)
from .thetaclass import (
    EigvecResult,
    Sign,
    StabilityReport,
    ThetaPartition,
    VertexSign,
    check_stability,
    classify_vertex,
    construct_eigenvector,
    root_classes,
    theta_partition,
    verify_eigenvector,
)
from .covers import (
    ExtremalReport,
    MainVerdict,
    PathCover,
    certify_main,
    enumerate_covers,
    is_extremal,
    min_path_cover,
)
from .sweeps import CAMPAIGNS, SweepConfig, SweepReport, run_sweep

__version__ = "0.1.0"

__all__ = [
    "AlgebraicRootClass",
    "CAMPAIGNS",
    "EigvecResult",
    "ExtremalReport",
    "FactoredPoly",
    "Graph",
    "IntPoly",
    "MainVerdict",
    "MatchCounts",
    "NumberFieldElem",
    "PathCover",
    "RealRootInterval",
    "Sign",
    "StabilityReport",
    "SweepConfig",
    "SweepReport",
    "ThetaPartition",
    "VertexSign",
    "builtin",
    "certify_main",
    "check_identities",
    "check_stability",
    "classify_vertex",
    "construct_eigenvector",
    "enumerate_covers",
    "enumerate_trees",
    "factor_irreducible",
    "is_extremal",
    "isolate_real_roots",
    "kernel_basis",
    "load_graph",
    "matching_counts",
    "matching_polynomial",
    "matching_polynomial_recurrence",
    "min_path_cover",
    "nf_div",
    "path_graph",
    "root_classes",
    "root_multiplicity",
    "run_sweep",
    "squarefree_decompose",
    "star_graph",
    "theta_partition",
    "verify_eigenvector",
]
