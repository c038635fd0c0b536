"""crtasep: exact stationary distributions of the two-species exclusion
process on a ring and Macdonald polynomials E/P for partitions with parts
at most 2, computed from cylindric rhombic tableaux and two-line queues,
cross-checked by an exact Markov solver and matrix-product traces."""

from .algebra import MultiPoly, QtxExpr, RatFunc, canonical_string, parse
from .combinatorics import (
    ArrowOrdering,
    Diagram,
    PartialPerm,
    Tableau,
    Word,
    build_diagram,
    complement,
    cycling,
    disorder,
    enumerate_orderings,
    enumerate_states,
    enumerate_tableaux,
    is_free,
    particle_hole,
    recoils,
    row_reading,
)
from .oracles import (
    build_transition_matrix,
    check_ansatz_relations,
    check_matrix_relations,
    f_mu,
    steady_state,
    trace_by_recurrence,
    truncated_trace,
)
from .queues import TwoLineQueue, crt_to_queue, enumerate_queues, queue_to_crt, queue_type, queue_weight
from .weights import (
    macdonald_E,
    macdonald_P,
    omega,
    partition_function,
    stationary_prob,
    tab_qtx,
    tab_t,
    wt_qtx,
    wt_qtx_ordered,
    wt_t,
    wt_x,
)

__version__ = "0.1.0"

__all__ = [
    "ArrowOrdering",
    "Diagram",
    "MultiPoly",
    "PartialPerm",
    "QtxExpr",
    "RatFunc",
    "Tableau",
    "TwoLineQueue",
    "Word",
    "build_diagram",
    "build_transition_matrix",
    "canonical_string",
    "check_ansatz_relations",
    "check_matrix_relations",
    "complement",
    "crt_to_queue",
    "cycling",
    "disorder",
    "enumerate_orderings",
    "enumerate_queues",
    "enumerate_states",
    "enumerate_tableaux",
    "f_mu",
    "is_free",
    "macdonald_E",
    "macdonald_P",
    "omega",
    "parse",
    "particle_hole",
    "partition_function",
    "queue_to_crt",
    "queue_type",
    "queue_weight",
    "recoils",
    "row_reading",
    "stationary_prob",
    "steady_state",
    "tab_qtx",
    "tab_t",
    "trace_by_recurrence",
    "truncated_trace",
    "wt_qtx",
    "wt_qtx_ordered",
    "wt_t",
    "wt_x",
]
