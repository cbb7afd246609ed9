"""Brute-force oracles for cross-checking the solvers on small graphs.

Subsets are enumerated as bitmasks with vectorized popcount tables, so
exhaustive sweeps up to the hard cap of 26 vertices stay fast.  Results are
canonical: among maximum-size feasible sets the lexicographically smallest
(as a sorted vertex tuple) is returned.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .graph import Graph
from .rational import parse_gamma

__all__ = ["DEFAULT_MAX_N", "HARD_MAX_N", "OracleLimitError", "brute_max_qc", "brute_max_kplex"]

DEFAULT_MAX_N = 20
HARD_MAX_N = 26

_PC16 = None


class OracleLimitError(ValueError):
    """Graph too large for exhaustive enumeration."""


def _pc16() -> np.ndarray:
    global _PC16
    if _PC16 is None:
        _PC16 = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.uint8)
    return _PC16


def _popcount(x: np.ndarray) -> np.ndarray:
    t = _pc16()
    return t[x & 0xFFFF] + t[(x >> 16) & 0xFFFF]


def _check_size(g: Graph, max_n: int) -> None:
    cap = min(max_n, HARD_MAX_N)
    if g.n > cap:
        raise OracleLimitError(f"oracle limited to {cap} vertices, graph has {g.n}")


def _adjacency_masks(g: Graph) -> np.ndarray:
    masks = np.zeros(g.n, dtype=np.int64)
    for u in range(g.n):
        row = 0
        for w in g.neighbors_of(u):
            row |= 1 << int(w)
        masks[u] = row
    return masks


def _sweep(g: Graph, feasible_fn) -> tuple[int, frozenset[int]]:
    """Max subset passing feasible_fn(sizes, indeg, members) over all masks.

    feasible_fn receives, for a block of masks, the subset sizes and the
    per-vertex induced degrees (n x block) plus the membership matrix, and
    returns a boolean feasibility vector.
    """
    n = g.n
    if n == 0:
        return 0, frozenset()
    adj = _adjacency_masks(g)
    best_size = 0
    best_masks: list[int] = []
    chunk = 1 << 18
    total = 1 << n
    for lo in range(1, total, chunk):
        hi = min(lo + chunk, total)
        masks = np.arange(lo, hi, dtype=np.int64)
        sizes = _popcount(masks).astype(np.int16)
        members = np.zeros((n, len(masks)), dtype=bool)
        indeg = np.zeros((n, len(masks)), dtype=np.int16)
        for v in range(n):
            members[v] = (masks >> v) & 1 == 1
            indeg[v] = _popcount(masks & adj[v])
        ok = feasible_fn(sizes, indeg, members)
        if not ok.any():
            continue
        top = int(sizes[ok].max())
        if top > best_size:
            best_size = top
            best_masks = []
        if top == best_size:
            sel = ok & (sizes == best_size)
            best_masks.extend(int(m) for m in masks[sel])
    if best_size == 0:
        return 0, frozenset()
    tuples = [tuple(v for v in range(n) if (m >> v) & 1) for m in best_masks]
    winner = min(tuples)
    return best_size, frozenset(winner)


def brute_max_qc(g: Graph, gamma, max_n: int = DEFAULT_MAX_N) -> tuple[int, frozenset[int]]:
    """Exhaustive maximum gamma-quasi-clique; ties resolved to the lex-smallest set."""
    gamma = gamma if isinstance(gamma, Fraction) else parse_gamma(gamma)
    _check_size(g, max_n)
    num, den = gamma.numerator, gamma.denominator

    def feasible(sizes, indeg, members):
        need = -(-num * (sizes.astype(np.int64) - 1) // den)
        bad = members & (indeg < need[None, :])
        return ~bad.any(axis=0)

    return _sweep(g, feasible)


def brute_max_kplex(g: Graph, k: int, max_n: int = DEFAULT_MAX_N) -> tuple[int, frozenset[int]]:
    """Exhaustive maximum k-plex; ties resolved to the lex-smallest set."""
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_size(g, max_n)

    def feasible(sizes, indeg, members):
        need = sizes.astype(np.int64) - k
        bad = members & (indeg < need[None, :])
        return ~bad.any(axis=0)

    return _sweep(g, feasible)
