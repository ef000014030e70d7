"""Independent Cascade simulation, Monte-Carlo spread estimation and
coverage (speed-of-propagation) metrics."""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from .errors import RequestError
from .graph import UNREACHABLE, Graph, multi_source_distances
from .parallel import worker_count


@dataclass(frozen=True)
class DiffusionOutcome:
    activated: int
    rounds: int
    activated_set: np.ndarray | None = None

    def to_json(self, g: Graph | None = None) -> dict:
        out = {"activated": self.activated, "rounds": self.rounds}
        if self.activated_set is not None and g is not None:
            out["activated_set"] = [g.label_of(v) for v in np.flatnonzero(self.activated_set)]
        return out


@dataclass(frozen=True)
class SpreadEstimate:
    mean_activated: float
    mean_rounds: float
    iterations: int
    master_seed: int

    @property
    def rounded_activated(self) -> int:
        return round_half_up(self.mean_activated)

    def to_json(self) -> dict:
        out = asdict(self)
        out["rounded_activated"] = self.rounded_activated
        return out


def round_half_up(x: float) -> int:
    return int(math.floor(x + 0.5))


def _seed_array(g: Graph, seeds) -> np.ndarray:
    members = getattr(seeds, "members", seeds)
    arr = np.unique(np.fromiter((g._check(s) for s in members), dtype=np.int64))
    if not arr.size:
        raise RequestError("seed set is empty")
    return arr


def _check_p(p: float) -> float:
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise RequestError(f"p must lie in [0, 1], got {p}")
    return p


def iteration_rng(master_seed: int, iteration: int) -> np.random.Generator:
    """Independent PCG64 stream for one Monte-Carlo iteration."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([master_seed, iteration])))


def _cascade(g: Graph, seeds: np.ndarray, p: float, rng: np.random.Generator,
             keep_set: bool) -> DiffusionOutcome:
    active = np.zeros(g.n, dtype=bool)
    active[seeds] = True
    frontier = seeds
    count = len(seeds)
    rounds = 0
    while frontier.size:
        # each vertex is in the frontier exactly once, so each (active, inactive)
        # pair gets exactly one coin flip
        targets = g.gather(frontier)
        targets = targets[~active[targets]]
        if not targets.size:
            break
        hits = targets[rng.random(targets.size) < p]
        if not hits.size:
            break
        frontier = np.unique(hits)
        active[frontier] = True
        count += len(frontier)
        rounds += 1
    return DiffusionOutcome(count, rounds, active if keep_set else None)


def ic_simulate(g: Graph, seeds, p: float, stream_seed: int | np.random.Generator = 0,
                keep_set: bool = True) -> DiffusionOutcome:
    """One synchronous Independent Cascade run.

    Round ``r`` vertices attempt each still-inactive neighbor once in round
    ``r + 1``; the run stops when a round activates nobody.  ``rounds`` is
    the number of rounds that activated at least one vertex.
    """
    seeds = _seed_array(g, seeds)
    p = _check_p(p)
    rng = stream_seed if isinstance(stream_seed, np.random.Generator) else np.random.default_rng(stream_seed)
    return _cascade(g, seeds, p, rng, keep_set)


def _run_block(g, seeds, p, master_seed, start, stop):
    total_act = 0
    total_rounds = 0
    for i in range(start, stop):
        out = _cascade(g, seeds, p, iteration_rng(master_seed, i), keep_set=False)
        total_act += out.activated
        total_rounds += out.rounds
    return total_act, total_rounds


def spread_samples(g: Graph, seeds, p: float, iterations: int, master_seed: int) -> np.ndarray:
    """Per-iteration activated counts (same streams as :func:`estimate_spread`)."""
    seeds = _seed_array(g, seeds)
    p = _check_p(p)
    return np.array([_cascade(g, seeds, p, iteration_rng(master_seed, i), False).activated
                     for i in range(iterations)], dtype=np.int64)


def estimate_spread(g: Graph, seeds, p: float, iterations: int = 1000, master_seed: int = 0,
                    workers: int | None = None) -> SpreadEstimate:
    """Monte-Carlo mean of activated count and rounds.

    Iteration ``i`` draws from a stream keyed by ``(master_seed, i)`` and the
    per-block sums are integers, so the estimate does not depend on
    ``workers`` or scheduling.
    """
    if iterations < 1:
        raise RequestError(f"iterations must be >= 1, got {iterations}")
    seeds = _seed_array(g, seeds)
    p = _check_p(p)
    if p == 0.0:
        return SpreadEstimate(float(len(seeds)), 0.0, iterations, master_seed)

    workers = min(worker_count(workers), iterations)
    bounds = np.linspace(0, iterations, workers + 1).astype(int)
    blocks = list(zip(bounds[:-1], bounds[1:]))
    if workers == 1:
        sums = [_run_block(g, seeds, p, master_seed, a, b) for a, b in blocks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            sums = list(pool.map(lambda ab: _run_block(g, seeds, p, master_seed, *ab), blocks))
    total_act = sum(s[0] for s in sums)
    total_rounds = sum(s[1] for s in sums)
    return SpreadEstimate(total_act / iterations, total_rounds / iterations, iterations, master_seed)


def seed_distances(g: Graph, seeds) -> np.ndarray:
    return multi_source_distances(g, _seed_array(g, seeds))


def coverage_report(g: Graph, seeds) -> tuple[int, int]:
    """``(steps, unreachable)``: the largest distance from a reachable vertex
    to its nearest seed, and how many vertices no seed can reach."""
    dist = seed_distances(g, seeds)
    reachable = dist != UNREACHABLE
    return int(dist[reachable].max()), int(g.n - np.count_nonzero(reachable))


def coverage_steps(g: Graph, seeds) -> int:
    """Rounds until the last reachable vertex activates when every edge fires."""
    return coverage_report(g, seeds)[0]


def firehouse_coverage(g: Graph, seeds, d: int) -> float:
    """Fraction of all vertices within distance ``d`` of some seed."""
    if d < 0:
        raise RequestError(f"d must be >= 0, got {d}")
    dist = multi_source_distances(g, _seed_array(g, seeds), max_depth=d)
    return np.count_nonzero(dist != UNREACHABLE) / g.n


def firehouse_decide(g: Graph, seeds, d: int, t: float) -> bool:
    if not 0.0 < t <= 1.0:
        raise RequestError(f"threshold t must lie in (0, 1], got {t}")
    return firehouse_coverage(g, seeds, d) >= t
