"""tait-lab: knot diagram invariants and Tait-conjecture batch checks.

Kauffman-bracket state sums, the Jones polynomial, writhe, Reidemeister
moves and flypes, diagram (semi)adequacy, the Alexander polynomial, and
a verification harness over bundled knot tables.
"""

from .laurent import LaurentPoly
from .diagram import Diagram, DiagramError, parse_pd, UNKNOT
from .bracket import (
    bracket,
    bracket_brute,
    bracket_contract,
    jones,
    smooth_loops,
    smoothing_state,
    SmoothingState,
    EngineLimitError,
    LOOP_FACTOR,
)
from .adequacy import (
    StateGraph,
    SemiadequacyData,
    state_graph,
    is_plus_adequate,
    is_minus_adequate,
    is_adequate,
    is_semiadequate,
    semiadequacy_data,
    extreme_coefficient_check,
    crossing_lower_bound,
    jones_nontriviality_check,
)
from .alexander import alexander, determinant, jones_chirality_obstruction
from .moves import (
    MoveSite,
    MoveError,
    enumerate_sites,
    apply_move,
    apply_script,
    random_move_walk,
    greedy_simplify,
)
from .generate import rational_knot, montesinos_knot, braid_closure, twist_chain
from .tables import TableEntry, IngestError, ingest, bundled_table_path
from .checker import compute_invariants, run_checks, CheckReport
from .cache import InvariantCache

__version__ = "0.1.0"

__all__ = [
    "LaurentPoly",
    "Diagram",
    "DiagramError",
    "parse_pd",
    "UNKNOT",
    "bracket",
    "bracket_brute",
    "bracket_contract",
    "jones",
    "smooth_loops",
    "smoothing_state",
    "SmoothingState",
    "EngineLimitError",
    "LOOP_FACTOR",
    "StateGraph",
    "SemiadequacyData",
    "state_graph",
    "is_plus_adequate",
    "is_minus_adequate",
    "is_adequate",
    "is_semiadequate",
    "semiadequacy_data",
    "extreme_coefficient_check",
    "crossing_lower_bound",
    "jones_nontriviality_check",
    "alexander",
    "determinant",
    "jones_chirality_obstruction",
    "MoveSite",
    "MoveError",
    "enumerate_sites",
    "apply_move",
    "apply_script",
    "random_move_walk",
    "greedy_simplify",
    "rational_knot",
    "montesinos_knot",
    "braid_closure",
    "twist_chain",
    "TableEntry",
    "IngestError",
    "ingest",
    "bundled_table_path",
    "compute_invariants",
    "run_checks",
    "CheckReport",
    "InvariantCache",
]
