"""Preprocessing bounds: peeling-based lb/ub and degree reduction.

One min-degree peeling pass yields both a feasible quasi-clique (the first
residual graph that satisfies the degree threshold, giving lb) and a
degeneracy-based size bound (ub).  ``reduce_graph`` then drops vertices that
cannot appear in any quasi-clique of size >= lb.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._kernels import cascade, peel
from .graph import Graph
from .rational import parse_gamma, qc_threshold, reduction_threshold

__all__ = [
    "BoundsResult",
    "PeelState",
    "ReductionStats",
    "get_bounds",
    "reduce_graph",
]


@dataclass(frozen=True)
class BoundsResult:
    """Peeling outcome: lb <= optimum <= ub, with a witness realizing lb."""

    lb: int
    ub: int
    lb_witness: frozenset[int]


def _validated_gamma(gamma) -> Fraction:
    g = gamma if isinstance(gamma, Fraction) else parse_gamma(gamma)
    if not Fraction(1, 2) <= g <= 1:
        raise ValueError(f"gamma must be in [0.5, 1], got {g}")
    return g


def get_bounds(g: Graph, gamma) -> BoundsResult:
    """Lower and upper bounds on the maximum gamma-quasi-clique size.

    Peels min-degree vertices (smallest id first among ties).  At each step
    the ub candidate min(1 + ceil(max_core/gamma), residual size) is folded
    in, and the first residual graph that is itself a quasi-clique is kept
    as the lb witness.  Runs in O((n+m) log n).
    """
    gamma = _validated_gamma(gamma)
    if g.n == 0:
        return BoundsResult(lb=0, ub=0, lb_witness=frozenset())
    order, _, _, lb_step, ub = peel(g.offsets, g.neighbors, gamma.numerator, gamma.denominator)
    lb = g.n - lb_step
    witness = frozenset(int(v) for v in order[lb_step:])
    return BoundsResult(lb=lb, ub=int(ub), lb_witness=witness)


class PeelState:
    """Stepwise view of the peeling loop with an incremental quasi-clique test.

    Maintains, for the current residual graph, the number of vertices whose
    induced degree is below ceil(gamma*(r-1)); the residual is a quasi-clique
    exactly when that violation count is zero.  Removing the min-degree
    vertex updates the count in O(degree) amortized plus threshold shifts.

    This is the reference implementation of the check used inside
    ``get_bounds``; the kernels reach the same verdict by comparing the
    minimum degree against the threshold directly.
    """

    def __init__(self, g: Graph, gamma):
        self.gamma = _validated_gamma(gamma)
        self._g = g
        self._alive = [True] * g.n
        self._deg = [g.degree(v) for v in range(g.n)]
        self._r = g.n
        self._positions: dict[int, set[int]] = {}
        for v in range(g.n):
            self._positions.setdefault(self._deg[v], set()).add(v)
        self._threshold = qc_threshold(self._r, self.gamma) if self._r else 0
        self._violations = sum(1 for v in range(g.n) if self._deg[v] < self._threshold)

    @property
    def residual_size(self) -> int:
        return self._r

    def residual(self) -> frozenset[int]:
        return frozenset(v for v in range(self._g.n) if self._alive[v])

    def check_qc_incremental(self) -> bool:
        """True when the current residual graph is a gamma-quasi-clique."""
        return self._r > 0 and self._violations == 0

    def _move(self, v: int, old: int, new: int) -> None:
        self._positions[old].discard(v)
        self._positions.setdefault(new, set()).add(v)
        below = self._threshold
        if old >= below > new:
            self._violations += 1
        elif new >= below > old:
            self._violations -= 1
        self._deg[v] = new

    def step(self) -> int:
        """Remove the min-degree vertex (smallest id among ties); returns it."""
        if self._r == 0:
            raise ValueError("residual graph is empty")
        d = 0
        while not self._positions.get(d):
            d += 1
        u = min(self._positions[d])
        self._positions[d].discard(u)
        if d < self._threshold:
            self._violations -= 1
        self._alive[u] = False
        self._r -= 1
        for w in self._g.neighbors_of(u):
            w = int(w)
            if self._alive[w]:
                self._move(w, self._deg[w], self._deg[w] - 1)
        old_t = self._threshold
        new_t = qc_threshold(self._r, self.gamma) if self._r else 0
        if new_t != old_t:
            # threshold only ever decreases as the residual shrinks
            for t in range(new_t, old_t):
                self._violations -= len(self._positions.get(t, ()))
            self._threshold = new_t
        return u


@dataclass(frozen=True)
class ReductionStats:
    """Removed-vertex/edge counts of a reduction pass, as absolute and percent."""

    removed_vertices: int
    removed_edges: int
    red_v_pct: float
    red_e_pct: float


def reduce_graph(g: Graph, gamma, lb: int) -> tuple[Graph, np.ndarray, ReductionStats]:
    """Cascade-remove vertices of degree below floor((lb-1)*gamma).

    Such vertices cannot lie in any gamma-quasi-clique of size >= lb, so the
    optimum is preserved whenever it is at least lb.  Returns the reduced
    graph, the kept-vertex id map, and removal statistics.
    """
    gamma = _validated_gamma(gamma)
    if lb < 1:
        raise ValueError("lb must be >= 1")
    thr = reduction_threshold(lb, gamma)
    keep_mask = cascade(g.offsets, g.neighbors, thr)
    kept = np.flatnonzero(keep_mask)
    reduced, kept_ids = g.induced_subgraph(kept)
    rv = g.n - reduced.n
    re = g.m - reduced.m
    stats = ReductionStats(
        removed_vertices=rv,
        removed_edges=re,
        red_v_pct=100.0 * rv / g.n if g.n else 0.0,
        red_e_pct=100.0 * re / g.m if g.m else 0.0,
    )
    return reduced, kept_ids, stats
