"""Odd-Ramsey edge colourings of Hamilton cycles.

Explicit colourings of complete and near-complete graphs in which every
Hamilton cycle has a colour class of odd size, exhaustive parity-aware
search oracles for small hosts, a constructive pipeline that extracts a
Hamilton cycle with at most one odd colour class from any colouring with
few colours, and a two-colour routine for graphs of high minimum degree.
"""

from __future__ import annotations

from .constructions import (
    DEFAULT_VERTEX_LIMIT,
    build_field_colouring,
    build_general_n,
    build_sparse_cayley,
    build_three_block,
    choose_parameters,
    special_vertex,
    vertex_limit,
)
from .core import (
    ColouredGraph,
    CyclePath,
    InvalidCycleError,
    MergeRegister,
    MissingEdgeError,
    OddRamseyError,
    ParameterError,
    ParityVector,
    PipelineError,
    ProcedureFailure,
    Switch,
    SwitchError,
    edge_key,
    flip_switch_in_cycle,
    odd_colour_classes,
    parity_vector,
)
from .dirac import (
    AgreeMatrix,
    build_agree_matrix,
    classify_two_colouring,
    even_hc_super_dirac,
    even_hc_from_odd_cycle,
    hamilton_cycle_dirac,
    odd_cycle_from_triple,
)
from .gf2 import first_dependency
from .occ import (
    cycle_to_line,
    graph_to_json,
    graph_to_text,
    parse_cycle,
    parse_graph,
    write_graph,
)
from .oracle import (
    ExactResult,
    SearchBudget,
    SearchResult,
    SearchStatus,
    exact_odd_ramsey,
    find_even_coloured_hc,
    find_hamilton_cycle,
    find_odd_cycle,
    find_switch,
)
from .randgen import (
    generator,
    random_dense_two_colouring,
    uniform_complete_colouring,
)
from .spicy import (
    AuditLog,
    SolveReport,
    build_spicy_starter,
    find_long_even_mono_cycle,
    run_pipeline,
    shorten_with_cherries,
    solve_complete,
    structure_or_switch,
    threshold_vertices,
    unmerge_and_flip,
)

__version__ = "0.1.0"

__all__ = [
    "AgreeMatrix",
    "AuditLog",
    "ColouredGraph",
    "CyclePath",
    "DEFAULT_VERTEX_LIMIT",
    "ExactResult",
    "InvalidCycleError",
    "MergeRegister",
    "MissingEdgeError",
    "OddRamseyError",
    "ParameterError",
    "ParityVector",
    "PipelineError",
    "ProcedureFailure",
    "SearchBudget",
    "SearchResult",
    "SearchStatus",
    "SolveReport",
    "Switch",
    "SwitchError",
    "build_agree_matrix",
    "build_field_colouring",
    "build_general_n",
    "build_sparse_cayley",
    "build_spicy_starter",
    "build_three_block",
    "choose_parameters",
    "classify_two_colouring",
    "cycle_to_line",
    "edge_key",
    "even_hc_from_odd_cycle",
    "even_hc_super_dirac",
    "exact_odd_ramsey",
    "find_even_coloured_hc",
    "find_hamilton_cycle",
    "find_long_even_mono_cycle",
    "find_odd_cycle",
    "find_switch",
    "first_dependency",
    "flip_switch_in_cycle",
    "generator",
    "graph_to_json",
    "graph_to_text",
    "hamilton_cycle_dirac",
    "odd_colour_classes",
    "odd_cycle_from_triple",
    "parity_vector",
    "parse_cycle",
    "parse_graph",
    "random_dense_two_colouring",
    "run_pipeline",
    "shorten_with_cherries",
    "solve_complete",
    "special_vertex",
    "structure_or_switch",
    "threshold_vertices",
    "uniform_complete_colouring",
    "unmerge_and_flip",
    "vertex_limit",
    "write_graph",
]
