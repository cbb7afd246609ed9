"""Maximum quasi-clique search by iterated reduction to k-plex subproblems.

For gamma in [0.5, 1], a quasi-clique of size x is a k-plex for
k = floor((1-gamma)*(x-1)) + 1, and a k-plex of exactly that parameter and
size is itself a quasi-clique.  The driver therefore walks a decreasing
sequence of target sizes, solving one max k-plex subproblem per step, until
the fixpoint k_i = get_k(s_i) certifies the answer.  The improved variant
starts from the peeling upper bound instead of n and replaces each exact
subproblem with a one-sided test against the midpoint of the known bounds,
which either yields the exact plex size or halves the interval.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .bounds import get_bounds, reduce_graph
from .graph import Graph, is_quasi_clique
from .kplex import SearchTimeout, plex_brb, plex_heu, plex_search
from .rational import parse_gamma, relaxation_k

__all__ = [
    "IterEntry",
    "SolveResult",
    "get_k",
    "basic_iterate",
    "improved_iter_search",
    "solve",
]


def get_k(x: int, gamma) -> int:
    """Plex parameter floor((1-gamma)*(x-1)) + 1 for target quasi-clique size x."""
    gamma = gamma if isinstance(gamma, Fraction) else parse_gamma(gamma)
    return relaxation_k(x, gamma)


@dataclass(frozen=True)
class IterEntry:
    """One driver iteration: subproblem parameter, outcome, and timing."""

    i: int
    k: int
    s: int
    pseudo_lb: int | None
    pseudo_size: int | None
    ms: float

    def to_dict(self) -> dict:
        return {
            "i": self.i,
            "k": self.k,
            "s": self.s,
            "pseudo_lb": self.pseudo_lb,
            "pseudo_size": self.pseudo_size,
            "ms": round(self.ms, 3),
        }


@dataclass(frozen=True)
class SolveResult:
    """Answer plus provenance: bounds, reduction effect, and per-iteration trace."""

    gamma: Fraction
    s_star: int
    witness: frozenset[int]
    optimal: bool
    mode: str
    use_pp: bool
    use_plb: bool
    lb: int | None
    ub: int | None
    red_v_pct: float
    red_e_pct: float
    trace: tuple[IterEntry, ...]
    total_ms: float
    witness_labels: tuple[int, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "gamma": str(self.gamma),
            "s_star": self.s_star,
            "witness": list(self.witness_labels),
            "optimal": self.optimal,
            "trace": [e.to_dict() for e in self.trace],
            "lb": self.lb,
            "ub": self.ub,
            "red_v_pct": round(self.red_v_pct, 2),
            "red_e_pct": round(self.red_e_pct, 2),
            "total_ms": round(self.total_ms, 3),
        }


def _validate_solver_gamma(gamma) -> Fraction:
    g = gamma if isinstance(gamma, Fraction) else parse_gamma(gamma)
    if not Fraction(1, 2) <= g <= 1:
        raise ValueError(f"solver requires gamma in [0.5, 1], got {g}")
    return g


def basic_iterate(
    g: Graph, gamma, deadline: float = 0.0
) -> tuple[int, frozenset[int], list[IterEntry]]:
    """Reference driver: s_0 = n, then s_i = exact max get_k(s_{i-1})-plex size.

    Stops at the first i with k_i = get_k(s_i); the final plex is then a
    maximum quasi-clique.  Requires a nonempty graph.
    """
    gamma = _validate_solver_gamma(gamma)
    if g.n == 0:
        raise ValueError("basic_iterate requires a nonempty graph")
    trace: list[IterEntry] = []
    s_prev = g.n
    witness: frozenset[int] = frozenset()
    i = 0
    while True:
        i += 1
        t0 = time.monotonic()
        k = get_k(s_prev, gamma)
        witness = plex_brb(g, k, floor_bound=1, deadline=deadline)
        s = len(witness)
        trace.append(IterEntry(i=i, k=k, s=s, pseudo_lb=None, pseudo_size=None, ms=(time.monotonic() - t0) * 1e3))
        if k == get_k(s, gamma):
            return s, witness, trace
        s_prev = s


def improved_iter_search(
    g: Graph,
    gamma,
    ub: int,
    use_plb: bool = True,
    deadline: float = 0.0,
) -> tuple[int, frozenset[int], list[IterEntry]]:
    """Driver seeded with an upper bound, using one plex_search round per step.

    ``ub`` must be a valid upper bound on the maximum quasi-clique size.
    Each step solves plex_search(g, get_k(s_{i-1}), s_{i-1}); the next target
    is max(pseudo_lb, pseudo_size).  Terminates when k_i = get_k(s_i) and
    pseudo_size >= pseudo_lb, at which point the returned plex is a maximum
    quasi-clique.
    """
    gamma = _validate_solver_gamma(gamma)
    if g.n == 0 or ub == 0:
        return 0, frozenset(), []
    if not 1 <= ub <= g.n:
        raise ValueError("ub must be in [1, n]")
    trace: list[IterEntry] = []
    s_prev = ub
    i = 0
    while True:
        i += 1
        t0 = time.monotonic()
        k = get_k(s_prev, gamma)
        out = plex_search(
            g, k, ub_plex=s_prev, use_pseudo_lb=use_plb, deadline=deadline, assume_diameter_two=True
        )
        s = max(out.pseudo_lb, out.pseudo_size)
        trace.append(
            IterEntry(
                i=i,
                k=k,
                s=s,
                pseudo_lb=out.pseudo_lb,
                pseudo_size=out.pseudo_size,
                ms=(time.monotonic() - t0) * 1e3,
            )
        )
        if k == get_k(s, gamma) and out.pseudo_size >= out.pseudo_lb:
            return s, out.witness, trace
        s_prev = s


def solve(
    g: Graph,
    gamma,
    mode: str = "improved",
    use_pp: bool = True,
    use_plb: bool = True,
    time_limit: float | None = None,
) -> SolveResult:
    """Exact maximum gamma-quasi-clique of g (gamma in [0.5, 1]).

    mode "improved" runs preprocessing bounds, reduction, and the
    pseudo-lower-bound driver; "basic" runs the reference iteration.
    ``use_pp`` toggles the bounds/reduction stage (without it the search
    starts from n) and ``use_plb`` toggles the midpoint bound inside
    plex_search.  ``time_limit`` (seconds) turns the result into a
    best-known answer with optimal=False when exceeded.
    """
    gamma = _validate_solver_gamma(gamma)
    if mode not in ("improved", "basic"):
        raise ValueError(f"unknown mode {mode!r}")
    t_start = time.monotonic()
    deadline = t_start + time_limit if time_limit else 0.0

    if g.n == 0:
        return SolveResult(
            gamma=gamma, s_star=0, witness=frozenset(), optimal=True, mode=mode,
            use_pp=use_pp, use_plb=use_plb, lb=0, ub=0, red_v_pct=0.0, red_e_pct=0.0,
            trace=(), total_ms=(time.monotonic() - t_start) * 1e3,
        )

    lb = ub = None
    lb_witness: frozenset[int] = frozenset()
    red_v = red_e = 0.0
    work = g
    back: np.ndarray | None = None
    if use_pp:
        bounds = get_bounds(g, gamma)
        lb, ub, lb_witness = bounds.lb, bounds.ub, bounds.lb_witness
        if lb == ub:
            # preprocessing alone pins the optimum; no plex subproblem needed
            return SolveResult(
                gamma=gamma, s_star=lb, witness=lb_witness, optimal=True, mode=mode,
                use_pp=use_pp, use_plb=use_plb, lb=lb, ub=ub,
                red_v_pct=100.0, red_e_pct=100.0, trace=(),
                total_ms=(time.monotonic() - t_start) * 1e3,
                witness_labels=tuple(sorted(g.label_of(v) for v in lb_witness)),
            )
        work, back, stats = reduce_graph(g, gamma, lb)
        red_v, red_e = stats.red_v_pct, stats.red_e_pct

    start_ub = min(ub, work.n) if ub is not None else work.n
    try:
        if mode == "basic":
            s_star, local_witness, trace = basic_iterate(work, gamma, deadline=deadline)
        else:
            s_star, local_witness, trace = improved_iter_search(
                work, gamma, start_ub, use_plb=use_plb, deadline=deadline
            )
        optimal = True
    except SearchTimeout as exc:
        # salvage the best valid answer known: the preprocessing witness, the
        # interrupted search's best set when it happens to be a quasi-clique,
        # or failing both a single vertex
        s_star = lb if lb is not None else 0
        local_witness = None
        if len(exc.best) > s_star and is_quasi_clique(work, exc.best, gamma):
            s_star = len(exc.best)
            local_witness = exc.best
        if s_star == 0:
            s_star = 1
            lb_witness = frozenset({0})
        trace = []
        optimal = False

    if local_witness is not None:
        witness = (
            frozenset(int(back[v]) for v in local_witness) if back is not None else local_witness
        )
    else:
        witness = lb_witness
    return SolveResult(
        gamma=gamma, s_star=s_star, witness=witness, optimal=optimal, mode=mode,
        use_pp=use_pp, use_plb=use_plb, lb=lb, ub=ub, red_v_pct=red_v, red_e_pct=red_e,
        trace=tuple(trace), total_ms=(time.monotonic() - t_start) * 1e3,
        witness_labels=tuple(sorted(g.label_of(v) for v in witness)),
    )
