"""Greedy maximal d-packings."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import RequestError
from .graph import UNREACHABLE, Graph, multi_source_distances


@dataclass(frozen=True)
class Packing:
    d: int
    members: tuple[int, ...]
    truncated: bool = False

    def __len__(self):
        return len(self.members)

    def to_json(self, g: Graph) -> dict:
        return {
            "d": self.d,
            "members": [g.label_of(v) for v in self.members],
            "truncated": self.truncated,
        }


def degree_order(g: Graph) -> np.ndarray:
    """Vertices by descending degree, ties by lowest index."""
    return np.lexsort((np.arange(g.n), -g.degrees))


def _greedy_packing(g: Graph, d: int, limit: int | None) -> list[int]:
    if d < 0:
        raise RequestError(f"d must be >= 0, got {d}")
    deleted = np.zeros(g.n, dtype=bool)
    members: list[int] = []
    for v in degree_order(g):
        if limit is not None and len(members) >= limit:
            break
        if deleted[v]:
            continue
        members.append(int(v))
        # balls are measured in the original graph, not the shrinking one
        ball = multi_source_distances(g, [v], max_depth=d)
        deleted |= ball != UNREACHABLE
    return members


def maximal_d_packing(g: Graph, d: int) -> Packing:
    """Select max-degree survivors, deleting each pick's radius-``d`` ball."""
    return Packing(d, tuple(_greedy_packing(g, d, None)))


def k_d_packing(g: Graph, k: int, d: int) -> Packing:
    """First ``k`` picks of :func:`maximal_d_packing`.

    ``truncated`` is set when the maximal packing has fewer than ``k`` members.
    """
    if k < 1:
        raise RequestError(f"k must be >= 1, got {k}")
    members = _greedy_packing(g, d, k)
    return Packing(d, tuple(members), truncated=len(members) < k)
