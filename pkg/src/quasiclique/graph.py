"""Undirected graph storage and file formats.

Graphs are stored in compressed sparse row form over compact vertex ids
0..n-1.  Vertex sets passed to and returned from the public API are plain
Python collections of those compact ids; ``labels`` remembers the ids used
in the input file so results can be reported in the caller's naming.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Collection, Iterable, Iterator

import numpy as np

from .rational import parse_gamma, qc_threshold

__all__ = [
    "Graph",
    "GraphFormatError",
    "CoreInfo",
    "load_graph",
    "write_graph",
    "is_quasi_clique",
    "is_kplex",
    "induced_degree",
    "core_decompose",
]


class GraphFormatError(ValueError):
    """Raised when a graph file cannot be parsed."""


@dataclass(eq=False)
class Graph:
    """Immutable undirected simple graph in CSR form.

    offsets has length n+1; neighbors holds each adjacency list sorted
    ascending.  Self loops and duplicate edges are removed on construction.
    """

    offsets: np.ndarray
    neighbors: np.ndarray
    labels: np.ndarray | None = field(default=None)

    @property
    def n(self) -> int:
        return len(self.offsets) - 1

    @property
    def m(self) -> int:
        return len(self.neighbors) // 2

    def degree(self, v: int) -> int:
        return int(self.offsets[v + 1] - self.offsets[v])

    def degrees(self) -> np.ndarray:
        return np.diff(self.offsets)

    def neighbors_of(self, v: int) -> np.ndarray:
        return self.neighbors[self.offsets[v] : self.offsets[v + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors_of(u)
        i = int(np.searchsorted(row, v))
        return i < len(row) and row[i] == v

    def label_of(self, v: int):
        return int(self.labels[v]) if self.labels is not None else v

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[int, int]] | np.ndarray,
        n: int | None = None,
        labels: np.ndarray | None = None,
    ) -> "Graph":
        """Build a graph from an undirected edge list.

        Self loops and duplicates (in either orientation) are dropped.  When
        ``n`` is None, vertex ids are compacted: the sorted distinct endpoint
        ids become labels and edges are rewritten to 0..n-1.  When ``n`` is
        given, endpoints must already lie in [0, n) and isolated vertices are
        allowed.
        """
        arr = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges, dtype=np.int64)
        if arr.size == 0:
            arr = arr.reshape(0, 2)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise ValueError("edges must be pairs")
        if n is None:
            ids = np.unique(arr)
            if labels is None:
                labels = ids
            elif len(labels) != len(ids):
                raise ValueError("labels length mismatch")
            arr = np.searchsorted(ids, arr)
            n = len(ids)
        else:
            if arr.size and (arr.min() < 0 or arr.max() >= n):
                raise ValueError("edge endpoint out of range")
        if n == 0:
            return cls(offsets=np.zeros(1, dtype=np.int64), neighbors=np.empty(0, dtype=np.int32), labels=labels)
        keep = arr[:, 0] != arr[:, 1]
        arr = arr[keep]
        lo = np.minimum(arr[:, 0], arr[:, 1])
        hi = np.maximum(arr[:, 0], arr[:, 1])
        code = np.unique(lo * np.int64(n) + hi)
        lo, hi = code // n, code % n
        src = np.concatenate([lo, hi])
        dst = np.concatenate([hi, lo])
        perm = np.argsort(src * np.int64(n) + dst, kind="stable")
        src, dst = src[perm], dst[perm]
        offsets = np.zeros(n + 1, dtype=np.int64)
        np.add.at(offsets, src + 1, 1)
        np.cumsum(offsets, out=offsets)
        return cls(offsets=offsets, neighbors=dst.astype(np.int32), labels=labels)

    def induced_subgraph(self, vertices: Collection[int]) -> tuple["Graph", np.ndarray]:
        """Induced subgraph plus the array mapping new ids to old ids."""
        kept = np.array(sorted(set(int(v) for v in vertices)), dtype=np.int64)
        if kept.size and (kept[0] < 0 or kept[-1] >= self.n):
            raise ValueError("vertex id out of range")
        newid = np.full(self.n, -1, dtype=np.int64)
        newid[kept] = np.arange(len(kept))
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees())
        dst = self.neighbors.astype(np.int64, copy=False)
        sel = (newid[src] >= 0) & (newid[dst] >= 0) & (src < dst)
        edges = np.stack([newid[src[sel]], newid[dst[sel]]], axis=1)
        sub_labels = self.labels[kept] if self.labels is not None else kept.copy()
        return Graph.from_edges(edges, n=len(kept), labels=sub_labels), kept

    def edge_iter(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for w in self.neighbors_of(u):
                if w > u:
                    yield u, int(w)


@dataclass(frozen=True)
class CoreInfo:
    """Result of core decomposition: core numbers, a degeneracy peel order, and their max."""

    core: np.ndarray
    peel_order: np.ndarray
    max_core: int

    @property
    def degeneracy(self) -> int:
        return self.max_core


def _check_vertex_set(g: Graph, s: Collection[int]) -> list[int]:
    members = [int(v) for v in s]
    if not members:
        raise ValueError("vertex set must be nonempty")
    if len(set(members)) != len(members):
        raise ValueError("vertex set has duplicates")
    for v in members:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    return members


def induced_degree(g: Graph, s: Collection[int], v: int) -> int:
    """Number of neighbors of v inside s; v must belong to s."""
    members = set(_check_vertex_set(g, s))
    if int(v) not in members:
        raise ValueError("v must be a member of s")
    return sum(1 for w in g.neighbors_of(int(v)) if int(w) in members)


def is_quasi_clique(g: Graph, s: Collection[int], gamma) -> bool:
    """True when every vertex of s has at least ceil(gamma*(|s|-1)) neighbors in s."""
    gamma = parse_gamma(gamma) if not isinstance(gamma, Fraction) else gamma
    members = _check_vertex_set(g, s)
    mset = set(members)
    need = qc_threshold(len(members), gamma)
    for v in members:
        d = sum(1 for w in g.neighbors_of(v) if int(w) in mset)
        if d < need:
            return False
    return True


def is_kplex(g: Graph, s: Collection[int], k: int) -> bool:
    """True when every vertex of s has at least |s|-k neighbors in s."""
    if k < 1:
        raise ValueError("k must be >= 1")
    members = _check_vertex_set(g, s)
    mset = set(members)
    need = len(members) - k
    if need <= 0:
        return True
    for v in members:
        d = sum(1 for w in g.neighbors_of(v) if int(w) in mset)
        if d < need:
            return False
    return True


def core_decompose(g: Graph) -> CoreInfo:
    """Core numbers via min-degree peeling (smallest id first among ties)."""
    from ._kernels import peel

    order, core, max_core, _, _ = peel(g.offsets, g.neighbors, 1, 1)
    return CoreInfo(core=core, peel_order=order, max_core=int(max_core))


# ---------------------------------------------------------------------------
# file formats


def _data_lines(text: str, comment_chars: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] in comment_chars:
            continue
        yield lineno, line


def _parse_edgelist(text: str) -> Graph:
    edges = []
    for lineno, line in _data_lines(text, "#%"):
        parts = line.split()
        if len(parts) < 2:
            raise GraphFormatError(f"line {lineno}: expected two vertex ids")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphFormatError(f"line {lineno}: non-integer vertex id") from exc
        if u < 0 or v < 0:
            raise GraphFormatError(f"line {lineno}: negative vertex id")
        edges.append((u, v))
    return Graph.from_edges(edges)


def _parse_metis(text: str) -> Graph:
    lines = list(_data_lines(text, "%"))
    if not lines:
        raise GraphFormatError("empty METIS file")
    header_no, header = lines[0]
    parts = header.split()
    if len(parts) not in (2, 3):
        raise GraphFormatError(f"line {header_no}: METIS header needs 2 or 3 fields")
    try:
        n, m = int(parts[0]), int(parts[1])
        fmt = int(parts[2]) if len(parts) == 3 else 0
    except ValueError as exc:
        raise GraphFormatError(f"line {header_no}: bad METIS header") from exc
    if fmt != 0:
        raise GraphFormatError(f"line {header_no}: unsupported METIS fmt {fmt} (only 0)")
    body = lines[1:]
    if len(body) != n:
        raise GraphFormatError(f"METIS body has {len(body)} vertex lines, header says {n}")
    edges = []
    for i, (lineno, line) in enumerate(body, start=1):
        for tok in line.split():
            try:
                w = int(tok)
            except ValueError as exc:
                raise GraphFormatError(f"line {lineno}: non-integer neighbor id") from exc
            if not 1 <= w <= n:
                raise GraphFormatError(f"line {lineno}: neighbor {w} outside 1..{n}")
            if w != i:
                edges.append((i - 1, w - 1))
    g = Graph.from_edges(edges, n=n, labels=np.arange(1, n + 1, dtype=np.int64))
    if g.m != m:
        raise GraphFormatError(f"METIS header claims {m} edges, body has {g.m}")
    return g


def _looks_like_metis(text: str) -> bool:
    lines = list(_data_lines(text, "%"))
    if not lines:
        return False
    parts = lines[0][1].split()
    if len(parts) not in (2, 3) or not all(p.isdigit() for p in parts):
        return False
    try:
        n = int(parts[0])
    except ValueError:
        return False
    return len(lines) - 1 == n


def load_graph(path, format: str = "auto") -> Graph:
    """Load a graph file in ``edgelist``, ``metis``, or ``auto`` format.

    Edge lists are whitespace-separated id pairs, one per line, with ``#`` or
    ``%`` comments; arbitrary non-negative ids are compacted and kept as
    labels.  METIS files are 1-based adjacency lines under an ``n m`` header.
    Auto picks METIS when the first data line is a consistent header.
    """
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if format == "edgelist":
        return _parse_edgelist(text)
    if format == "metis":
        return _parse_metis(text)
    if format == "auto":
        if _looks_like_metis(text):
            try:
                return _parse_metis(text)
            except GraphFormatError:
                # header shape matched but the body disagreed: treat as edgelist
                pass
        return _parse_edgelist(text)
    raise ValueError(f"unknown format {format!r}")


def write_graph(g: Graph, path, header: str | None = None) -> None:
    """Write one ``u v`` edge line per edge (original labels), optionally with a # header."""
    buf = io.StringIO()
    if header:
        for line in header.splitlines():
            buf.write(f"# {line}\n")
    for u, v in g.edge_iter():
        buf.write(f"{g.label_of(u)} {g.label_of(v)}\n")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(buf.getvalue())
