"""Numerical radius, Euclidean operator radius and norm, and an inequality verifier."""

from .catalog import (
    BoundReport,
    Status,
    check_angle_inequality,
    check_eq4,
    check_generalized_cauchy_schwarz,
    check_mixed_schwarz,
    evaluate_chain,
    evaluate_relation,
    get_relation,
    list_relations,
)
from .errors import NumradError
from .fileio import parse_matrix_file, parse_vector_file, write_matrix_file, write_vector_file
from .harness import EnsembleSpec, Structure, generate_matrix, run_paper_examples, run_property_suite
from .linalg import (
    HermitianEigen,
    block_antidiag,
    cartesian_parts,
    classify,
    hermitian_eigen,
    matrix_abs,
    operator_norm,
    psd_sqrt,
)
from .radii import (
    DEFAULT_CONFIG,
    Method,
    QuantityResult,
    SweepConfig,
    block_numerical_radius,
    euclidean_norm,
    euclidean_norm_xy_oracle,
    euclidean_radius,
    numerical_radius,
    omega_e_grid_oracle,
    real_part_norm_sup,
    support_function,
)

__all__ = [
    "DEFAULT_CONFIG",
    "BoundReport",
    "EnsembleSpec",
    "HermitianEigen",
    "Method",
    "NumradError",
    "QuantityResult",
    "Status",
    "Structure",
    "SweepConfig",
    "block_antidiag",
    "block_numerical_radius",
    "cartesian_parts",
    "check_angle_inequality",
    "check_eq4",
    "check_generalized_cauchy_schwarz",
    "check_mixed_schwarz",
    "classify",
    "euclidean_norm",
    "euclidean_norm_xy_oracle",
    "euclidean_radius",
    "evaluate_chain",
    "evaluate_relation",
    "generate_matrix",
    "get_relation",
    "hermitian_eigen",
    "list_relations",
    "matrix_abs",
    "numerical_radius",
    "omega_e_grid_oracle",
    "operator_norm",
    "parse_matrix_file",
    "parse_vector_file",
    "psd_sqrt",
    "real_part_norm_sup",
    "run_paper_examples",
    "run_property_suite",
    "support_function",
    "write_matrix_file",
    "write_vector_file",
]
