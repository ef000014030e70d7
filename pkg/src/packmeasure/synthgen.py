"""Rings of cliques joined by short paths: networks with scattered dense
communities."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SpecError
from .graph import Graph


@dataclass(frozen=True)
class SyntheticSpec:
    clique_sizes: tuple[int, ...]
    path_internal: int = 0
    rng_seed: int = 0
    topology: str = "ring"

    def __post_init__(self):
        object.__setattr__(self, "clique_sizes", tuple(int(s) for s in self.clique_sizes))
        if self.topology != "ring":
            raise SpecError(f"unsupported topology {self.topology!r}")
        if len(self.clique_sizes) < 3:
            raise SpecError("a ring needs at least 3 cliques")
        if min(self.clique_sizes) < 2:
            raise SpecError("clique sizes must be >= 2")
        if self.path_internal < 0:
            raise SpecError("path_internal must be >= 0")

    @property
    def n(self) -> int:
        return sum(self.clique_sizes) + len(self.clique_sizes) * self.path_internal

    @property
    def m(self) -> int:
        return (sum(s * (s - 1) // 2 for s in self.clique_sizes)
                + len(self.clique_sizes) * (self.path_internal + 1))

    def to_json(self) -> dict:
        return {"clique_sizes": list(self.clique_sizes), "path_internal": self.path_internal,
                "rng_seed": self.rng_seed, "topology": self.topology}


# Four cliques, largest 500, 9 path vertices between neighbors: 1586 vertices,
# 318015 edges.  Sizes are a reconstruction matching those totals.
PRESETS = {
    "paper4": SyntheticSpec((500, 450, 350, 250), path_internal=9, rng_seed=0),
}


def clique_offsets(spec: SyntheticSpec) -> list[int]:
    """First vertex index of each clique (cliques occupy consecutive blocks)."""
    return np.concatenate([[0], np.cumsum(spec.clique_sizes)[:-1]]).astype(int).tolist()


def community_of(spec: SyntheticSpec, v: int) -> int | None:
    """Clique number containing ``v``, or None for a path vertex."""
    for i, (start, size) in enumerate(zip(clique_offsets(spec), spec.clique_sizes)):
        if start <= v < start + size:
            return i
    return None


def port_vertices(spec: SyntheticSpec) -> list[tuple[int, int]]:
    """``(port in clique i, port in clique i+1)`` for each ring link."""
    rng = np.random.default_rng(spec.rng_seed)
    offsets = clique_offsets(spec)
    c = len(spec.clique_sizes)
    ports = []
    for i in range(c):
        j = (i + 1) % c
        a = offsets[i] + int(rng.integers(spec.clique_sizes[i]))
        b = offsets[j] + int(rng.integers(spec.clique_sizes[j]))
        ports.append((a, b))
    return ports


def generate_scattered_cliques(spec: SyntheticSpec) -> Graph:
    parts = []
    for start, size in zip(clique_offsets(spec), spec.clique_sizes):
        iu, ju = np.triu_indices(size, k=1)
        parts.append(np.column_stack([iu + start, ju + start]))
    nxt = sum(spec.clique_sizes)
    for a, b in port_vertices(spec):
        chain = [a, *range(nxt, nxt + spec.path_internal), b]
        nxt += spec.path_internal
        parts.append(np.column_stack([chain[:-1], chain[1:]]))
    return Graph.from_edges(np.concatenate(parts), n=spec.n)


def parse_spec(text: str) -> SyntheticSpec:
    """``paper4`` or ``c1,c2,...[/L[/seed]]``."""
    if text in PRESETS:
        return PRESETS[text]
    fields = text.split("/")
    try:
        sizes = tuple(int(s) for s in fields[0].split(","))
        path = int(fields[1]) if len(fields) > 1 else 0
        seed = int(fields[2]) if len(fields) > 2 else 0
    except ValueError:
        raise SpecError(f"cannot parse synthetic spec {text!r}") from None
    return SyntheticSpec(sizes, path, seed)
