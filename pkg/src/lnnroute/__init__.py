"""LNN synthesis of reversible circuits with graph-partitioning line reordering.

Pipeline: parse a RevLib ``.real`` file, decompose multiple-controlled
Toffolis to plain NCT gates, count the SWAP pairs needed for linear
nearest-neighbor form, reorder the qubit lines to shrink that count, and
insert the concrete SWAP gates.
"""

from .circuit import (
    CapacityError,
    Circuit,
    CostModel,
    Gate,
    GateKind,
    Line,
    MustDecomposeError,
    apply_ordering,
    compose_orderings,
    gate_span,
    identity_ordering,
    inverse_ordering,
    quantum_cost,
)
from .decompose import DecompositionPlan, decompose_circuit, decompose_mct, decompose_with_plans
from .graph import AdjacencyGraph, arrangement_cost, build_graph, format_adjacency
from .lnn import SwapCount, circuit_swap_pairs, insert_swaps, is_lnn, swap_pairs_for_gate
from .ordering import (
    ReorderOutcome,
    best_ordering_exhaustive,
    linear_order,
    order_from_labels,
    partition_labels,
    reorder_pipeline,
)
from .partition import bisect
from .report import CostReport, SuiteResult, run_file, run_suite, to_csv, to_markdown
from .revlib import ParseError, RealHeader, load_real, parse_real, save_real, write_real
from .simulate import equivalent, simulate, truth_table

__all__ = [
    "AdjacencyGraph", "CapacityError", "Circuit", "CostModel", "CostReport",
    "DecompositionPlan", "Gate", "GateKind", "Line", "MustDecomposeError",
    "ParseError", "RealHeader", "ReorderOutcome", "SuiteResult", "SwapCount",
    "apply_ordering", "arrangement_cost", "best_ordering_exhaustive", "bisect",
    "build_graph", "circuit_swap_pairs", "compose_orderings", "decompose_circuit",
    "decompose_mct", "decompose_with_plans", "equivalent", "format_adjacency",
    "gate_span", "identity_ordering", "insert_swaps", "inverse_ordering",
    "is_lnn", "linear_order", "load_real", "order_from_labels", "parse_real",
    "partition_labels", "quantum_cost", "reorder_pipeline", "run_file",
    "run_suite", "save_real", "simulate", "swap_pairs_for_gate", "to_csv",
    "to_markdown", "truth_table", "write_real",
]

__version__ = "0.1.0"
