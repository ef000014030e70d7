"""Experiment harness: sweep seed methods over k, estimate spread, report."""
from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field
from pathlib import Path

from .diffusion import coverage_steps, estimate_spread
from .errors import ConfigError
from .graph import Graph, load_edge_list
from .heuristics import METHODS, PACK_METHODS, influence_values, select_seeds
from .synthgen import SyntheticSpec, generate_scattered_cliques, parse_spec

SYNTHETIC_PREFIX = "synthetic:"
CSV_FIELDS = ("method", "k", "d", "p", "rounded_activated", "mean_rounds", "coverage_steps")


def load_dataset(dataset: str | dict) -> Graph:
    """An edge-list path, ``synthetic:<spec>``, or ``{"synthetic": {...}}``."""
    if isinstance(dataset, dict):
        if "synthetic" not in dataset:
            raise ConfigError("dataset object must have a 'synthetic' key")
        try:
            spec = SyntheticSpec(**dataset["synthetic"])
        except TypeError as exc:
            raise ConfigError(f"bad synthetic spec: {exc}") from None
        return generate_scattered_cliques(spec)
    if dataset.startswith(SYNTHETIC_PREFIX):
        return generate_scattered_cliques(parse_spec(dataset[len(SYNTHETIC_PREFIX):]))
    return load_edge_list(dataset)


@dataclass(frozen=True)
class MethodSpec:
    method: str
    d: int | None = None
    refine: bool = True

    @property
    def label(self) -> str:
        return self.method if self.d is None else f"{self.method}/{self.d}"


@dataclass
class ExperimentConfig:
    dataset: str | dict
    methods: list[MethodSpec]
    k_values: list[int]
    p: float
    iterations: int = 1000
    master_seed: int = 0
    outputs: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.methods:
            raise ConfigError("methods must be non-empty")
        for ms in self.methods:
            if ms.method not in METHODS:
                raise ConfigError(f"unknown method {ms.method!r}; expected one of {', '.join(METHODS)}")
            if ms.method in PACK_METHODS and (ms.d is None or ms.d < 0):
                raise ConfigError(f"method {ms.method!r} needs a packing distance d >= 0")
        if not self.k_values:
            raise ConfigError("k_values must be non-empty")
        if any(k < 1 for k in self.k_values) or list(self.k_values) != sorted(set(self.k_values)):
            raise ConfigError("k_values must be positive and strictly ascending")
        if not 0.0 <= self.p <= 1.0:
            raise ConfigError("p must lie in [0, 1]")
        if self.iterations < 1:
            raise ConfigError("iterations must be >= 1")

    @classmethod
    def from_dict(cls, raw: dict) -> "ExperimentConfig":
        try:
            methods = []
            for item in raw["methods"]:
                if isinstance(item, str):
                    methods.append(MethodSpec(item))
                elif isinstance(item, (list, tuple)):
                    methods.append(MethodSpec(*item))
                else:
                    methods.append(MethodSpec(**item))
            return cls(
                dataset=raw["dataset"],
                methods=methods,
                k_values=[int(k) for k in raw["k_values"]],
                p=float(raw["p"]),
                iterations=int(raw.get("iterations", 1000)),
                master_seed=int(raw.get("master_seed", 0)),
                outputs=dict(raw.get("outputs", {})),
            )
        except KeyError as exc:
            raise ConfigError(f"missing config field {exc}") from None
        except (TypeError, ValueError) as exc:
            if isinstance(exc, ConfigError):
                raise
            raise ConfigError(f"malformed config: {exc}") from None

    @classmethod
    def from_file(cls, path) -> "ExperimentConfig":
        path = Path(path)
        try:
            raw = json.loads(path.read_text(encoding="utf-8"))
        except FileNotFoundError:
            raise ConfigError(f"config file not found: {path}") from None
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config file {path} is not valid JSON: {exc}") from None
        if not isinstance(raw, dict):
            raise ConfigError("config must be a JSON object")
        return cls.from_dict(raw)


@dataclass
class ReportRow:
    method: str
    k: int
    d: int | None
    p: float
    rounded_activated: int
    mean_rounds: float
    coverage_steps: int
    wall_time: float = 0.0
    mean_activated: float = 0.0
    flags: tuple = ()

    def record(self) -> dict:
        """The deterministic columns, formatted as written to CSV/JSON."""
        return {
            "method": self.method,
            "k": self.k,
            "d": "" if self.d is None else self.d,
            "p": repr(self.p),
            "rounded_activated": self.rounded_activated,
            "mean_rounds": f"{self.mean_rounds:.3f}",
            "coverage_steps": self.coverage_steps,
        }


def run_experiment(config: ExperimentConfig, graph: Graph | None = None,
                   workers: int | None = None, log=None) -> list[ReportRow]:
    """One row per (method, k), in config method order then ascending k."""
    g = graph if graph is not None else load_dataset(config.dataset)
    if config.k_values[-1] > g.n:
        raise ConfigError(f"k={config.k_values[-1]} exceeds the {g.n} vertices of the dataset")
    scores = None
    rows = []
    for ms in config.methods:
        if ms.method.startswith("dih") and scores is None:
            scores = influence_values(g, workers)
        for k in config.k_values:
            t0 = time.perf_counter()
            seeds = select_seeds(g, ms.method, k, ms.d, rng_seed=config.master_seed,
                                 refine=ms.refine, scores=scores, workers=workers)
            est = estimate_spread(g, seeds, config.p, config.iterations, config.master_seed, workers)
            steps = coverage_steps(g, seeds)
            row = ReportRow(ms.method, k, ms.d, config.p, est.rounded_activated, est.mean_rounds,
                            steps, time.perf_counter() - t0, est.mean_activated, seeds.flags)
            rows.append(row)
            if log:
                log(f"{ms.label:>12} k={k:<4} spread={row.rounded_activated:<6} "
                    f"rounds={row.mean_rounds:.2f} steps={steps} ({row.wall_time:.1f}s)")
    return rows


def rows_to_csv(rows: list[ReportRow]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row.record())
    return buf.getvalue()


def rows_to_json(rows: list[ReportRow], config: ExperimentConfig) -> str:
    payload = {
        "dataset": config.dataset,
        "p": config.p,
        "iterations": config.iterations,
        "master_seed": config.master_seed,
        "rows": [row.record() for row in rows],
    }
    return json.dumps(payload, indent=2) + "\n"


def rows_to_timing(rows: list[ReportRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["method", "k", "d", "wall_time"])
    for row in rows:
        writer.writerow([row.method, row.k, "" if row.d is None else row.d, f"{row.wall_time:.4f}"])
    return buf.getvalue()


def write_reports(rows: list[ReportRow], config: ExperimentConfig, csv_path=None,
                  json_path=None, timing_path=None) -> list[Path]:
    written = []
    for path, text in ((csv_path, rows_to_csv(rows)), (json_path, rows_to_json(rows, config)),
                       (timing_path, rows_to_timing(rows))):
        if path:
            path = Path(path)
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding="utf-8")
            written.append(path)
    return written

