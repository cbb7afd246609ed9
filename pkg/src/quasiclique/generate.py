"""Seeded synthetic graph generators (scale-free and small-world).

Both models use ``random.Random`` so the same seed reproduces the same graph
on any platform.
"""

from __future__ import annotations

import math
import random

import numpy as np

from .graph import Graph

__all__ = ["gen_sf", "gen_sw", "sample_vertices"]


def gen_sf(n: int, w: int, seed: int) -> Graph:
    """Scale-free graph: preferential attachment with w edges per new vertex.

    Starts from a star on vertices 0..w-1 centered at 0; each vertex v >= w
    then attaches to w distinct earlier vertices sampled proportionally to
    degree (by drawing from the accumulated edge-endpoint list, retrying
    duplicates).  Edge count is exactly (w-1) + (n-w)*w.
    """
    if not 1 <= w < n:
        raise ValueError("need 1 <= w < n")
    rng = random.Random(seed)
    edges: list[tuple[int, int]] = []
    endpoints: list[int] = []
    for leaf in range(1, w):
        edges.append((0, leaf))
        endpoints.append(0)
        endpoints.append(leaf)
    for v in range(w, n):
        targets: list[int] = []
        seen = set()
        while len(targets) < w:
            if endpoints:
                t = endpoints[rng.randrange(len(endpoints))]
            else:
                t = rng.randrange(v)
            if t not in seen:
                seen.add(t)
                targets.append(t)
        for t in targets:
            edges.append((v, t))
            endpoints.append(v)
            endpoints.append(t)
    return Graph.from_edges(np.array(edges, dtype=np.int64), n=n)


def gen_sw(n: int, d: int, p: float, seed: int) -> Graph:
    """Small-world graph: ring lattice with ceil(d/2) offsets, rewired with prob p.

    Each lattice edge (u, u+j) is visited in offset-major order; with
    probability p its far endpoint is replaced by a uniformly random vertex
    that is neither u nor already adjacent to u (skipped when u is adjacent
    to everything).  For even d and 2*ceil(d/2) < n the edge count is n*d/2.
    """
    if not 0 < d < n:
        raise ValueError("need 0 < d < n")
    if not 0.0 <= p <= 1.0:
        raise ValueError("need 0 <= p <= 1")
    rng = random.Random(seed)
    half = (d + 1) // 2
    adj: list[set[int]] = [set() for _ in range(n)]
    for j in range(1, half + 1):
        for u in range(n):
            v = (u + j) % n
            if u != v:
                adj[u].add(v)
                adj[v].add(u)
    for j in range(1, half + 1):
        for u in range(n):
            v = (u + j) % n
            if u == v or v not in adj[u]:
                continue
            if rng.random() < p:
                if len(adj[u]) >= n - 1:
                    continue
                t = rng.randrange(n)
                while t == u or t in adj[u]:
                    t = rng.randrange(n)
                adj[u].discard(v)
                adj[v].discard(u)
                adj[u].add(t)
                adj[t].add(u)
    edges = [(u, v) for u in range(n) for v in adj[u] if u < v]
    return Graph.from_edges(np.array(edges, dtype=np.int64).reshape(-1, 2), n=n)


def sample_vertices(g: Graph, ratio: float, seed) -> tuple[Graph, np.ndarray]:
    """Induced subgraph on a uniform random sample of ceil(ratio*n) vertices."""
    if not 0 < ratio <= 1:
        raise ValueError("ratio must be in (0, 1]")
    if ratio == 1.0:
        return g, np.arange(g.n, dtype=np.int64)
    rng = random.Random(seed)
    size = math.ceil(ratio * g.n)
    sample = rng.sample(range(g.n), size)
    return g.induced_subgraph(sample)
