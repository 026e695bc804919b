"""Relation registry, relation evaluation and vector-level checks."""

from .evaluate import (
    DEFAULT_EQ_TOL,
    DEFAULT_TOL,
    BoundReport,
    LinkResult,
    Status,
    evaluate_chain,
    evaluate_relation,
)
from .registry import Kind, Relation, Signature, get_relation, list_relations, registry_json
from .vectors import (
    VECTOR_CHECKS,
    check_angle_inequality,
    check_eq4,
    check_generalized_cauchy_schwarz,
    check_mixed_schwarz,
)

__all__ = [
    "DEFAULT_EQ_TOL",
    "DEFAULT_TOL",
    "BoundReport",
    "Kind",
    "LinkResult",
    "Relation",
    "Signature",
    "Status",
    "VECTOR_CHECKS",
    "check_angle_inequality",
    "check_eq4",
    "check_generalized_cauchy_schwarz",
    "check_mixed_schwarz",
    "evaluate_chain",
    "evaluate_relation",
    "get_relation",
    "list_relations",
    "registry_json",
]
