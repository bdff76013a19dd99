"""Maximal-clique listing by reverse search.

The enumeration walks an in-tree over the maximal cliques rooted at the
lexicographically greatest one, generating children of whole batches of
cliques in one shot (via a rectangular matrix product or packed set
intersections) and optionally smoothing output through a bounded-delay
queue scheduler.
"""

from .batch_dfs import (
    BATCH_COMPLETED,
    CLIQUE_COLLECTED,
    TRAVERSAL_ENDED,
    BacktrackStack,
    StepEvent,
    TraversalStats,
    batch_dfs,
    pop_from_top,
    step_events,
)
from .delay_scheduler import (
    DelayConfig,
    Emission,
    EmissionQueue,
    StrictRunReport,
    boot,
    calibrate,
    list_mc,
    run_strict,
)
from .graph import (
    EMPTY,
    Graph,
    VertexSet,
    lex_compare,
    lex_greater,
    neighborhood,
    prefix_neighbors,
    restrict_below,
    sort_lex_descending,
)
from .kernels import (
    ChildSpec,
    GoodTable,
    build_batch_matrices,
    children_batch,
    children_naive,
    filter_children,
    good_table_bitset,
    good_table_rectangular,
)
from .rs_tree import (
    OpCounter,
    child,
    clique_index,
    clique_index_scan,
    is_clique,
    is_maximal_clique,
    lex_completion,
    parent,
    root,
)

__all__ = [
    "BATCH_COMPLETED",
    "CLIQUE_COLLECTED",
    "TRAVERSAL_ENDED",
    "BacktrackStack",
    "ChildSpec",
    "DelayConfig",
    "EMPTY",
    "Emission",
    "EmissionQueue",
    "GoodTable",
    "Graph",
    "OpCounter",
    "StepEvent",
    "StrictRunReport",
    "TraversalStats",
    "VertexSet",
    "batch_dfs",
    "boot",
    "build_batch_matrices",
    "calibrate",
    "child",
    "children_batch",
    "children_naive",
    "clique_index",
    "clique_index_scan",
    "filter_children",
    "good_table_bitset",
    "good_table_rectangular",
    "is_clique",
    "is_maximal_clique",
    "lex_compare",
    "lex_completion",
    "lex_greater",
    "list_mc",
    "neighborhood",
    "parent",
    "pop_from_top",
    "prefix_neighbors",
    "restrict_below",
    "root",
    "run_strict",
    "sort_lex_descending",
    "step_events",
]
