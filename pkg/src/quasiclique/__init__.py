"""Exact maximum quasi-clique search via iterated k-plex subproblems."""

from ._kernels import BACKEND
from .bounds import BoundsResult, PeelState, ReductionStats, get_bounds, reduce_graph
from .generate import gen_sf, gen_sw, sample_vertices
from .graph import (
    CoreInfo,
    Graph,
    GraphFormatError,
    core_decompose,
    induced_degree,
    is_kplex,
    is_quasi_clique,
    load_graph,
    write_graph,
)
from .kplex import (
    PlexOutcome,
    SearchTimeout,
    brb_call_count,
    plex_brb,
    plex_heu,
    plex_search,
    pseudo_lower_bound,
    reset_brb_call_count,
)
from .oracle import OracleLimitError, brute_max_kplex, brute_max_qc
from .rational import parse_gamma
from .solver import IterEntry, SolveResult, basic_iterate, get_k, improved_iter_search, solve

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BoundsResult",
    "CoreInfo",
    "Graph",
    "GraphFormatError",
    "IterEntry",
    "OracleLimitError",
    "PeelState",
    "PlexOutcome",
    "ReductionStats",
    "SearchTimeout",
    "SolveResult",
    "basic_iterate",
    "brb_call_count",
    "brute_max_kplex",
    "brute_max_qc",
    "core_decompose",
    "gen_sf",
    "gen_sw",
    "get_bounds",
    "get_k",
    "improved_iter_search",
    "induced_degree",
    "is_kplex",
    "is_quasi_clique",
    "load_graph",
    "parse_gamma",
    "plex_brb",
    "plex_heu",
    "plex_search",
    "pseudo_lower_bound",
    "reduce_graph",
    "reset_brb_call_count",
    "sample_vertices",
    "solve",
    "write_graph",
    "__version__",
]
