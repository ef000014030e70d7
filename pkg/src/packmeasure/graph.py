"""Undirected simple graphs in compressed adjacency form, plus BFS primitives.

Vertices are addressed by internal index ``0..n-1``.  Raw labels read from an
edge list are kept in ``Graph.labels`` and mapped back with ``Graph.index_of``.
"""
from __future__ import annotations

import gzip
import io
import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import EmptyGraphError, GraphParseError

UNREACHABLE = -1


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable undirected simple graph.

    ``indptr``/``indices`` form a CSR adjacency structure: the sorted neighbors
    of ``v`` are ``indices[indptr[v]:indptr[v + 1]]``.
    """

    indptr: np.ndarray
    indices: np.ndarray
    labels: np.ndarray
    load_stats: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        self.indptr.setflags(write=False)
        self.indices.setflags(write=False)
        self.labels.setflags(write=False)

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], n: int | None = None,
                   labels: Sequence[int] | None = None, load_stats: dict | None = None) -> "Graph":
        """Build a graph from internal-index edge pairs.

        Self-loops are dropped and parallel edges collapsed.  ``n`` defaults to
        one more than the largest index seen; ``labels`` defaults to the
        indices themselves.
        """
        arr = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges,
                         dtype=np.int64).reshape(-1, 2)
        if n is None:
            n = int(arr.max()) + 1 if arr.size else 0
        if arr.size and (arr.min() < 0 or arr.max() >= n):
            raise IndexError("edge endpoint out of range")
        arr = arr[arr[:, 0] != arr[:, 1]]
        lo = np.minimum(arr[:, 0], arr[:, 1])
        hi = np.maximum(arr[:, 0], arr[:, 1])
        keys = np.unique(lo * n + hi)
        lo, hi = keys // n, keys % n
        src = np.concatenate([lo, hi])
        dst = np.concatenate([hi, lo])
        order = np.lexsort((dst, src))
        src, dst = src[order], dst[order]
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
        if labels is None:
            labels = np.arange(n, dtype=np.int64)
        labels = np.asarray(labels, dtype=np.int64)
        if labels.shape != (n,):
            raise ValueError("labels must have one entry per vertex")
        return cls(indptr, dst.astype(np.int64), labels, dict(load_stats or {}))

    @property
    def n(self) -> int:
        return len(self.indptr) - 1

    @property
    def m(self) -> int:
        return len(self.indices) // 2

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def _check(self, v: int) -> int:
        v = int(v)
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for graph with {self.n} vertices")
        return v

    def neighbors(self, v: int) -> np.ndarray:
        v = self._check(v)
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    @property
    def adjacency(self) -> list[list[int]]:
        return [self.neighbors(v).tolist() for v in range(self.n)]

    @cached_property
    def label_map(self) -> dict[int, int]:
        """Raw label -> internal index."""
        return {int(lab): i for i, lab in enumerate(self.labels)}

    def index_of(self, label: int) -> int:
        try:
            return self.label_map[int(label)]
        except KeyError:
            raise KeyError(f"no vertex labelled {label}") from None

    def label_of(self, v: int) -> int:
        return int(self.labels[self._check(v)])

    def edges(self) -> np.ndarray:
        """Undirected edges as an ``(m, 2)`` array with ``u < v``, sorted."""
        src = np.repeat(np.arange(self.n), self.degrees)
        mask = src < self.indices
        return np.column_stack([src[mask], self.indices[mask]])

    def gather(self, frontier: np.ndarray) -> np.ndarray:
        """Concatenated neighbor lists of every vertex in ``frontier``."""
        starts = self.indptr[frontier]
        counts = self.indptr[frontier + 1] - starts
        total = int(counts.sum())
        if total == 0:
            return np.empty(0, dtype=np.int64)
        offsets = np.repeat(starts - np.cumsum(counts) + counts, counts)
        return self.indices[offsets + np.arange(total)]


@dataclass(frozen=True)
class DistanceField:
    source: int
    dist: np.ndarray

    def reachable(self) -> np.ndarray:
        return self.dist != UNREACHABLE


def degree(g: Graph, v: int) -> int:
    v = g._check(v)
    return int(g.indptr[v + 1] - g.indptr[v])


def multi_source_distances(g: Graph, sources: Iterable[int], max_depth: int | None = None) -> np.ndarray:
    """Hop distance from each vertex to the nearest source.

    Vertices farther than ``max_depth`` (when given) or in other components
    get ``UNREACHABLE``.
    """
    dist = np.full(g.n, UNREACHABLE, dtype=np.int64)
    frontier = np.unique(np.fromiter((g._check(s) for s in sources), dtype=np.int64))
    dist[frontier] = 0
    level = 0
    while frontier.size and (max_depth is None or level < max_depth):
        nbrs = g.gather(frontier)
        nbrs = nbrs[dist[nbrs] == UNREACHABLE]
        if not nbrs.size:
            break
        frontier = np.unique(nbrs)
        level += 1
        dist[frontier] = level
    return dist


def bfs_distances(g: Graph, source: int) -> DistanceField:
    source = g._check(source)
    return DistanceField(source, multi_source_distances(g, [source]))


def shell_sizes(g: Graph, v: int) -> list[int]:
    """``[|N_1(v)|, |N_2(v)|, ...]`` up to the eccentricity of ``v``."""
    dist = bfs_distances(g, v).dist
    return np.bincount(dist[dist > 0])[1:].tolist()


def load_edge_list(source, comment: str = "#") -> Graph:
    """Parse a SNAP-style edge list.

    ``source`` may be a path (gzip if it ends in ``.gz``), a text/binary
    stream, or bytes.  Lines starting
    with ``comment`` are skipped; every other non-blank line must contain two
    integer labels.  Internal indices follow first appearance of each label.
    """
    if isinstance(source, (str, os.PathLike)):
        opener = gzip.open if str(source).endswith(".gz") else open
        with opener(source, "rb") as fh:
            data = fh.read()
    elif isinstance(source, (bytes, bytearray)):
        data = bytes(source)
    else:
        data = source.read()
    text = data.decode("utf-8") if isinstance(data, (bytes, bytearray)) else data

    index: dict[int, int] = {}
    pairs: list[int] = []
    arcs = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(comment):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(lineno, raw)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(lineno, raw) from None
        pairs.append(index.setdefault(a, len(index)))
        pairs.append(index.setdefault(b, len(index)))
        arcs += 1

    arr = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
    loops = int(np.count_nonzero(arr[:, 0] == arr[:, 1])) if arcs else 0
    if arcs == loops:
        raise EmptyGraphError("edge list contains no edges")
    labels = np.fromiter(index.keys(), dtype=np.int64, count=len(index))
    g = Graph.from_edges(arr, n=len(index), labels=labels)
    g.load_stats.update(arcs=arcs, self_loops=loops, duplicates=arcs - loops - g.m)
    return g


def write_edge_list(g: Graph, dest) -> None:
    """Write the canonical sorted edge list (raw labels, ``u < v`` by index)."""
    buf = io.StringIO()
    buf.write(f"# Undirected graph: {g.n} vertices, {g.m} edges\n")
    edges = g.edges()
    labels = g.labels
    for u, v in edges:
        buf.write(f"{labels[u]}\t{labels[v]}\n")
    text = buf.getvalue()
    if isinstance(dest, (str, os.PathLike)):
        with open(dest, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        dest.write(text)
