"""Seed-set heuristics: random, maximum degree, diminishing influence, and
their pack-and-measure combinations."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import RequestError
from .graph import UNREACHABLE, Graph, bfs_distances, multi_source_distances
from .packing import degree_order, k_d_packing
from .parallel import worker_count

METHODS = ("random", "mdh", "dih", "mdh-pack", "dih-pack")
PACK_METHODS = ("mdh-pack", "dih-pack")


@dataclass(frozen=True)
class InfluenceScore:
    vertex: int
    value: float


@dataclass(frozen=True)
class SeedSet:
    method: str
    k: int
    members: tuple[int, ...]
    d: int | None = None
    flags: tuple[str, ...] = ()

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    @property
    def truncated(self) -> bool:
        return "truncated" in self.flags

    @property
    def degraded(self) -> bool:
        return "degraded" in self.flags

    def to_json(self, g: Graph) -> dict:
        out = {"method": self.method, "k": self.k}
        if self.d is not None:
            out["d"] = self.d
        out["seeds"] = [g.label_of(v) for v in self.members]
        out["flags"] = list(self.flags)
        return out


def _influence_from_distances(dist: np.ndarray) -> float:
    shells = np.bincount(dist[dist > 0])[1:]
    # 2**-i underflows to 0 past depth ~1074, which is the intended limit
    return float(np.dot(shells, np.exp2(-np.arange(1, len(shells) + 1, dtype=float))))


def diminishing_influence(g: Graph, v: int) -> InfluenceScore:
    """Sum of shell sizes around ``v`` weighted by 1/2 per hop."""
    dist = bfs_distances(g, v).dist
    return InfluenceScore(int(v), _influence_from_distances(dist))


def diminishing_influence_all(g: Graph, workers: int | None = None) -> list[InfluenceScore]:
    """Scores for every vertex, one BFS each.

    Each score depends only on its own BFS, so the result is identical for
    any worker count.
    """
    workers = worker_count(workers)

    def score(v):
        return diminishing_influence(g, v)

    if workers == 1 or g.n < 64:
        return [score(v) for v in range(g.n)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(score, range(g.n), chunksize=32))


def influence_values(g: Graph, workers: int | None = None) -> np.ndarray:
    return np.array([s.value for s in diminishing_influence_all(g, workers)], dtype=float)


def _check_k(g: Graph, k: int) -> None:
    if k < 1:
        raise RequestError(f"k must be >= 1, got {k}")
    if k > g.n:
        raise RequestError(f"k={k} exceeds the number of vertices ({g.n})")


def _top_k(values: np.ndarray, k: int) -> tuple[int, ...]:
    order = np.lexsort((np.arange(len(values)), -values))
    return tuple(int(v) for v in order[:k])


def mdh_seeds(g: Graph, k: int) -> SeedSet:
    """The ``k`` highest-degree vertices, ties by lowest index."""
    _check_k(g, k)
    return SeedSet("mdh", k, tuple(int(v) for v in degree_order(g)[:k]))


def dih_seeds(g: Graph, k: int, scores: np.ndarray | None = None, workers: int | None = None) -> SeedSet:
    _check_k(g, k)
    if scores is None:
        scores = influence_values(g, workers)
    return SeedSet("dih", k, _top_k(np.asarray(scores, dtype=float), k))


def random_seeds(g: Graph, k: int, rng_seed: int) -> SeedSet:
    """``k`` distinct vertices drawn uniformly with a PCG64 stream seeded by ``rng_seed``."""
    _check_k(g, k)
    rng = np.random.default_rng(rng_seed)
    return SeedSet("random", k, tuple(int(v) for v in rng.choice(g.n, size=k, replace=False)))


class _Measure:
    """Lazy per-vertex measure with an optional full table."""

    def __init__(self, g: Graph, measure: str, scores: np.ndarray | None, workers: int | None):
        self.g = g
        self.workers = workers
        self._table = None
        if measure == "degree":
            self._table = g.degrees.astype(float)
        elif measure == "diminishing-influence":
            if scores is not None:
                self._table = np.asarray(scores, dtype=float)
        else:
            raise RequestError(f"unknown measure {measure!r}")
        self._cache: dict[int, float] = {}

    def __call__(self, v: int) -> float:
        if self._table is not None:
            return float(self._table[v])
        if v not in self._cache:
            self._cache[v] = diminishing_influence(self.g, v).value
        return self._cache[v]

    def table(self) -> np.ndarray:
        if self._table is None:
            self._table = influence_values(self.g, self.workers)
        return self._table


def _best_in_closed_neighborhood(g: Graph, u: int, measure: Callable[[int], float]) -> int:
    best, best_val = u, measure(u)
    for w in g.neighbors(u):  # ascending, so strict > keeps the lowest index on ties
        val = measure(int(w))
        if val > best_val:
            best, best_val = int(w), val
    return best


def pack_and_measure_seeds(g: Graph, k: int, d: int, measure: str = "degree", *,
                           refine: bool = True, scores: np.ndarray | None = None,
                           workers: int | None = None) -> SeedSet:
    """Scatter seeds with a greedy ``d``-packing, then move each packing
    element to the best vertex of its closed neighborhood.

    When the packing and deduplication leave fewer than ``k`` seeds, the set
    is padded with the best-scoring vertices farther than ``d`` from every
    chosen seed, then, if still short, by score alone (flag ``degraded``).
    With ``refine=False`` the packing elements are used as-is.
    """
    _check_k(g, k)
    if d < 0:
        raise RequestError(f"d must be >= 0, got {d}")
    method = {"degree": "mdh-pack", "diminishing-influence": "dih-pack"}.get(measure)
    score = _Measure(g, measure, scores, workers)

    packing = k_d_packing(g, k, d)
    flags = ["truncated"] if packing.truncated else []
    seeds: list[int] = []
    for u in packing.members:
        v = _best_in_closed_neighborhood(g, u, score) if refine else u
        if v not in seeds:
            seeds.append(v)

    if len(seeds) < k:
        order = np.lexsort((np.arange(g.n), -score.table()))
        chosen = np.zeros(g.n, dtype=bool)
        chosen[seeds] = True
        near = multi_source_distances(g, seeds, max_depth=d) != UNREACHABLE
        for w in order:
            if len(seeds) == k:
                break
            if near[w]:
                continue
            seeds.append(int(w))
            chosen[w] = True
            near |= multi_source_distances(g, [w], max_depth=d) != UNREACHABLE
        if len(seeds) < k:
            flags.append("degraded")
            for w in order:
                if len(seeds) == k:
                    break
                if not chosen[w]:
                    seeds.append(int(w))
                    chosen[w] = True
    return SeedSet(method, k, tuple(seeds), d=d, flags=tuple(flags))


def select_seeds(g: Graph, method: str, k: int, d: int | None = None, *, rng_seed: int = 0,
                 refine: bool = True, scores: np.ndarray | None = None,
                 workers: int | None = None) -> SeedSet:
    """Dispatch on a method tag from :data:`METHODS`."""
    if method == "random":
        return random_seeds(g, k, rng_seed)
    if method == "mdh":
        return mdh_seeds(g, k)
    if method == "dih":
        return dih_seeds(g, k, scores, workers)
    if method in PACK_METHODS:
        if d is None:
            raise RequestError(f"method {method!r} requires a packing distance d")
        measure = "degree" if method == "mdh-pack" else "diminishing-influence"
        return pack_and_measure_seeds(g, k, d, measure, refine=refine, scores=scores, workers=workers)
    raise RequestError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")
