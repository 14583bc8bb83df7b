"""Exact workbench for polynomial reducibility between finite sets.

Works over cyclotomic fields Q(zeta_N) with exact rational coordinates;
no floating point enters any decision procedure.
"""
from .field import (
    CyclotomicField,
    FieldElement,
    FieldMismatchError,
    make_field,
)
from .poly import (
    NEG_INF,
    LinearMap,
    LinearSolution,
    Poly,
    interpolate_labeled,
    solve_linear,
)
from .classes import (
    ClassInvariant,
    FiniteSubset,
    Stabilizer,
    canonical_invariant,
    characteristic_lambda_points,
    chi,
    equivalent,
    lambda_tuple,
    linear_maps_between,
    roots_of_unity,
    sigma3_coordinate,
    stabilizer,
)
from .exceptional import (
    ExceptionalStructure,
    decompose,
    generate_exceptional,
    is_exceptional,
    order2_criterion,
)
from .reduction import (
    DegreeWindow,
    Reduction,
    SuccessorClass,
    check_exact_preimage,
    degree_bounds,
    find_reductions,
    normalize_to_contain_0_1,
    predecessor_2n_minus_1,
    reduces,
    singleton_reduction,
    successors,
)
from .vandermonde import (
    EnrichedVandermonde,
    build_enriched,
    exact_rank,
)
from .cli import (
    PosetReport,
    SetFile,
    SetFileError,
    build_poset,
    emit_set_file,
    main,
    parse_set_file,
    parse_set_text,
    run_command,
)

__all__ = [
    "CyclotomicField", "FieldElement", "FieldMismatchError", "make_field",
    "NEG_INF", "LinearMap", "LinearSolution", "Poly", "interpolate_labeled",
    "solve_linear",
    "ClassInvariant", "FiniteSubset", "Stabilizer", "canonical_invariant",
    "characteristic_lambda_points", "chi", "equivalent", "lambda_tuple",
    "linear_maps_between", "roots_of_unity", "sigma3_coordinate", "stabilizer",
    "ExceptionalStructure", "decompose", "generate_exceptional",
    "is_exceptional", "order2_criterion",
    "DegreeWindow", "Reduction", "SuccessorClass", "check_exact_preimage",
    "degree_bounds", "find_reductions", "normalize_to_contain_0_1",
    "predecessor_2n_minus_1", "reduces", "singleton_reduction", "successors",
    "EnrichedVandermonde", "build_enriched", "exact_rank",
    "PosetReport", "SetFile", "SetFileError", "build_poset", "emit_set_file",
    "main", "parse_set_file", "parse_set_text", "run_command",
]

__version__ = "0.1.0"
