"""Clique number, witnesses and chromatic invariants of zero-divisor graphs.

G(Z_n) is the graph on {1, ..., n-1} joining distinct x, y whenever n
divides x*y. The package computes its clique number in closed form from
the factorization of n, constructs an explicit maximum clique, and
cross-checks both against two independent exact oracles: a weighted
clique search on the gcd-compressed divisor-class graph, and tiny-scale
brute force on the elements themselves.
"""

from .brute import (
    GraphStats,
    chi1_brute,
    chi_brute,
    delta_brute,
    graph_stats,
    max_clique_vertices,
    omega_brute,
)
from .class_graph import (
    DivisorClassGraph,
    OmegaExact,
    build_class_graph,
    class_elements,
    compression_mismatch,
    delta_exact,
    omega_exact,
)
from .errors import DomainError, ResourceLimitError
from .factorization import (
    Factorization,
    divisor_table,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    vector_totients,
)
from .formulas import (
    CliqueAnalysis,
    CliqueCase,
    chromatic_identities,
    classify,
    clique_number,
    has_zero_divisor_pair,
    max_degree_paper,
)
from .graph import (
    ExplicitGraph,
    build_graph,
    export_graph,
    render_dot,
    render_edge_list,
    vertex_degree,
)
from .sweep import SweepRow, SweepSummary, analyze_row, summarize, verify_range
from .witness import CliqueCheck, CliqueWitness, build_witness, verify_clique

__version__ = "0.1.0"

__all__ = [
    "CliqueAnalysis",
    "CliqueCase",
    "CliqueCheck",
    "CliqueWitness",
    "DivisorClassGraph",
    "DomainError",
    "ExplicitGraph",
    "Factorization",
    "GraphStats",
    "OmegaExact",
    "ResourceLimitError",
    "SweepRow",
    "SweepSummary",
    "analyze_row",
    "build_class_graph",
    "build_graph",
    "build_witness",
    "chi1_brute",
    "chi_brute",
    "chromatic_identities",
    "class_elements",
    "classify",
    "clique_number",
    "compression_mismatch",
    "delta_brute",
    "delta_exact",
    "divisor_table",
    "divisors",
    "euler_phi",
    "export_graph",
    "factorize",
    "graph_stats",
    "has_zero_divisor_pair",
    "is_prime",
    "max_clique_vertices",
    "max_degree_paper",
    "omega_brute",
    "omega_exact",
    "render_dot",
    "render_edge_list",
    "summarize",
    "vector_totients",
    "verify_clique",
    "verify_range",
    "vertex_degree",
    "__version__",
]
