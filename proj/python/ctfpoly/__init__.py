"""Exact tension-flow counting polynomials of small multigraphs."""

from ._core import (
    BudgetExceeded,
    EnumerationLimitExceeded,
    Graph,
    InterpolationError,
    ParseError,
    Polynomial,
    classes,
    count,
    counting_polynomial,
    example_graph,
    families,
    local_polynomial,
    orientations,
    polynomials,
    rank_generating,
    run_cli,
    tutte,
    verify,
)

__all__ = [
    "BudgetExceeded",
    "EnumerationLimitExceeded",
    "Graph",
    "InterpolationError",
    "ParseError",
    "Polynomial",
    "classes",
    "count",
    "counting_polynomial",
    "example_graph",
    "families",
    "local_polynomial",
    "orientations",
    "polynomials",
    "rank_generating",
    "run_cli",
    "tutte",
    "verify",
]
