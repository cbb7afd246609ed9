"""Maximum k-plex search: greedy heuristic and exact branch-and-bound.

``plex_brb`` is exact subject to a floor: it returns a maximum k-plex when
one of size >= floor_bound exists and the empty set otherwise.  The search
works root by root in degeneracy order; candidate sets shrink via core
numbers, distance-2 restriction (always valid once the target size reaches
2k-1, optionally assumed outright in quasi-clique context), and
common-neighbor filtering, then an include/exclude recursion with degree
budgets, forced inclusions, and a take-all test does the rest.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from ._kernels import cascade, greedy_plex, peel, plex_branch_bound
from .graph import Graph

__all__ = [
    "DEFAULT_HEU_STARTS",
    "GREEDY_WORK_LIMIT",
    "PlexOutcome",
    "SearchTimeout",
    "brb_call_count",
    "plex_brb",
    "plex_heu",
    "plex_search",
    "pseudo_lower_bound",
    "reset_brb_call_count",
]

DEFAULT_HEU_STARTS = 100
GREEDY_WORK_LIMIT = 2_000_000


def pseudo_lower_bound(lb_plex: int, ub_plex: int) -> int:
    """Midpoint floor((lb_plex + ub_plex) / 2) used as the search floor."""
    return (lb_plex + ub_plex) // 2

_brb_calls = 0


def brb_call_count() -> int:
    """Number of plex_brb invocations since the last reset (instrumentation)."""
    return _brb_calls


def reset_brb_call_count() -> None:
    global _brb_calls
    _brb_calls = 0


class SearchTimeout(Exception):
    """Raised when a search exceeds its deadline; carries the best set so far."""

    def __init__(self, best: frozenset[int]):
        super().__init__("search deadline exceeded")
        self.best = best


@dataclass(frozen=True)
class PlexOutcome:
    """plex_search result: the midpoint bound tried and what the exact search returned."""

    pseudo_lb: int
    pseudo_size: int
    witness: frozenset[int]


def _validate_k(k: int) -> None:
    if k < 1:
        raise ValueError("k must be >= 1")


def plex_heu(
    g: Graph,
    k: int,
    starts: int = DEFAULT_HEU_STARTS,
    max_size: int = 0,
    work_limit: int = GREEDY_WORK_LIMIT,
) -> frozenset[int]:
    """Greedy k-plex: grow from the top ``starts`` vertices in reverse peel order.

    Each growth step adds the candidate with the most neighbors in the
    current set (smallest id on ties) subject to the k-plex constraints.
    Deterministic; total effort is bounded by ``work_limit`` candidate scans.
    """
    _validate_k(k)
    if g.n == 0:
        return frozenset()
    order, _, _, _, _ = peel(g.offsets, g.neighbors, 1, 1)
    chosen = order[::-1][: max(1, starts)].astype(np.int32)
    best = greedy_plex(g.offsets, g.neighbors, k, chosen, max_size, work_limit)
    return frozenset(int(v) for v in best)


def _core_count_bound(core: np.ndarray, k: int, n_work: int) -> int:
    """Largest k+j such that at least k+j vertices have core number >= j."""
    ub = min(k, n_work)
    if n_work == 0:
        return ub
    max_core = int(core.max())
    counts = np.bincount(core, minlength=max_core + 1)
    at_least = np.cumsum(counts[::-1])[::-1]  # at_least[j] = #{v : core(v) >= j}
    for j in range(max_core, 0, -1):
        if at_least[j] >= k + j:
            ub = max(ub, min(k + j, n_work))
            break
    return ub


def plex_brb(
    g: Graph,
    k: int,
    floor_bound: int = 1,
    deadline: float = 0.0,
    assume_diameter_two: bool = False,
    seed: frozenset[int] | None = None,
) -> frozenset[int]:
    """Exact maximum k-plex of size >= floor_bound, or empty set if none exists.

    ``seed`` may carry a known k-plex (used to tighten pruning from the
    start).  ``assume_diameter_two`` restricts every root subproblem to the
    root's distance-2 neighborhood; callers must guarantee that a maximum
    plex of the required size has diameter <= 2 (true for connected
    quasi-cliques with gamma >= 0.5).  Raises SearchTimeout past ``deadline``
    (a time.monotonic value; 0 disables).
    """
    global _brb_calls
    _validate_k(k)
    if floor_bound < 1:
        raise ValueError("floor_bound must be >= 1")
    _brb_calls += 1
    if g.n == 0:
        return frozenset()

    keep = cascade(g.offsets, g.neighbors, floor_bound - k)
    kept = np.flatnonzero(keep)
    if len(kept) < floor_bound:
        return frozenset()
    if len(kept) == g.n:
        work, back = g, None
    else:
        work, back = g.induced_subgraph(kept)[0], kept

    n_w = work.n
    degs = work.degrees()
    if n_w >= floor_bound and (n_w == 0 or int(degs.min()) >= n_w - k):
        members = range(n_w) if back is None else (int(v) for v in back)
        return frozenset(members)

    order, core, _, _, _ = peel(work.offsets, work.neighbors, 1, 1)
    ub_stop = _core_count_bound(core, k, n_w)
    if ub_stop < floor_bound:
        return frozenset()

    if seed:
        local = seed if back is None else None
        if back is not None:
            lookup = {int(v): i for i, v in enumerate(back)}
            local = {lookup[v] for v in seed if v in lookup}
            if local is not None and len(local) != len(seed):
                local = None  # seed lost vertices in reduction; ignore it
        seed_arr = np.array(sorted(local), dtype=np.int32) if local else np.empty(0, dtype=np.int32)
    else:
        seed_arr = greedy_plex(
            work.offsets, work.neighbors, k, order[::-1][:DEFAULT_HEU_STARTS].astype(np.int32), 0, GREEDY_WORK_LIMIT
        )

    best, completed = plex_branch_bound(
        work.offsets,
        work.neighbors,
        k,
        floor_bound,
        ub_stop,
        order,
        core,
        seed_arr,
        1 if assume_diameter_two else 0,
        deadline,
    )
    result = [int(v) for v in best]
    if back is not None:
        result = [int(back[v]) for v in result]
    out = frozenset(result)
    if not completed:
        raise SearchTimeout(out)
    return out


def plex_search(
    g: Graph,
    k: int,
    ub_plex: int,
    use_pseudo_lb: bool = True,
    deadline: float = 0.0,
    assume_diameter_two: bool = False,
    heu_starts: int = DEFAULT_HEU_STARTS,
) -> PlexOutcome:
    """One k-plex round against a caller-supplied size bound ub_plex.

    Finds a heuristic plex (lb_plex), sets pseudo_lb to the midpoint
    floor((lb_plex + ub_plex)/2) (or to lb_plex when use_pseudo_lb is off),
    then runs the exact search with that floor.  pseudo_size is the exact
    maximum size when it reaches the floor, else 0.  Requires ub_plex to be
    a valid upper bound on the maximum k-plex size.
    """
    _validate_k(k)
    if ub_plex < 1:
        raise ValueError("ub_plex must be >= 1")
    heu = plex_heu(g, k, starts=heu_starts, max_size=ub_plex)
    lb_plex = len(heu)
    if lb_plex >= ub_plex:
        return PlexOutcome(pseudo_lb=lb_plex, pseudo_size=lb_plex, witness=heu)
    pseudo_lb = pseudo_lower_bound(lb_plex, ub_plex) if use_pseudo_lb else max(1, lb_plex)
    witness = plex_brb(
        g,
        k,
        floor_bound=pseudo_lb,
        deadline=deadline,
        assume_diameter_two=assume_diameter_two,
        seed=heu if len(heu) >= pseudo_lb else None,
    )
    return PlexOutcome(pseudo_lb=pseudo_lb, pseudo_size=len(witness), witness=witness)
