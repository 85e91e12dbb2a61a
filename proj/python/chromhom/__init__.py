"""Chromatic graph homology over Z[x]/(p)."""

from ._core import (
    Algebra,
    Graph,
    ParseError,
    ResourceLimitError,
    algebra,
    chromatic_polynomial,
    contract_edge,
    delete_edge,
    graph,
    homology,
    homology_json,
    load_graph,
    paper_suite,
    run_cli,
    table,
)

__all__ = [
    "Algebra",
    "Graph",
    "ParseError",
    "ResourceLimitError",
    "algebra",
    "chromatic_polynomial",
    "contract_edge",
    "delete_edge",
    "graph",
    "homology",
    "homology_json",
    "load_graph",
    "paper_suite",
    "run_cli",
    "table",
]
