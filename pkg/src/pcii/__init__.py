"""pcii: pairwise-comparison matrices, inconsistency indicators, and axiom checks."""

from .errors import PcError
from .matrix import (
    PCMatrix,
    Permutation,
    ScalingVector,
    SubmatrixSelector,
    Triad,
    TriadIndex,
    enumerate_selectors,
    from_weights,
    is_consistent,
    permute,
    reciprocalize,
    scale_action,
    submatrix,
    transpose,
    triad_at,
    triads,
    validate,
)
from .indicators import (
    Indicator,
    IndicatorResult,
    evaluate,
    extend_triad_indicator,
    get_indicator,
    invariant_map,
    kii_triad,
    principal_eigenvalue,
    register_family,
    relative_error,
)
from .axioms import (
    AxiomCheckConfig,
    AxiomReport,
    EmbeddingSpec,
    check_axiom,
    embed_triad,
    random_consistent_matrix,
    random_pc_matrix,
    run_consistency_suite,
    run_independence_suite,
    verify_counterexample,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomCheckConfig",
    "AxiomReport",
    "EmbeddingSpec",
    "Indicator",
    "IndicatorResult",
    "PCMatrix",
    "PcError",
    "Permutation",
    "ScalingVector",
    "SubmatrixSelector",
    "Triad",
    "TriadIndex",
    "check_axiom",
    "embed_triad",
    "enumerate_selectors",
    "evaluate",
    "extend_triad_indicator",
    "from_weights",
    "get_indicator",
    "invariant_map",
    "is_consistent",
    "kii_triad",
    "permute",
    "principal_eigenvalue",
    "random_consistent_matrix",
    "random_pc_matrix",
    "reciprocalize",
    "register_family",
    "relative_error",
    "run_consistency_suite",
    "run_independence_suite",
    "scale_action",
    "submatrix",
    "transpose",
    "triad_at",
    "triads",
    "validate",
    "verify_counterexample",
]
