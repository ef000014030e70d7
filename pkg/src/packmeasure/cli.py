"""Command-line entry point: ``packmeasure {stats,seeds,simulate,steps,generate,bench}``.

Exit status: 0 on success, 2 for usage errors, 1 for runtime failures
(unreadable data, invalid parameters, bad configs).
"""
from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from . import __version__
from .bench import ExperimentConfig, load_dataset, rows_to_csv, run_experiment, write_reports
from .diffusion import coverage_report, estimate_spread, firehouse_coverage
from .errors import PackMeasureError
from .graph import write_edge_list
from .heuristics import METHODS, SeedSet, select_seeds
from .synthgen import PRESETS, SyntheticSpec, generate_scattered_cliques

EXIT_RUNTIME = 1
EXIT_USAGE = 2


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _add_seed_args(p, required=True):
    p.add_argument("--method", choices=METHODS, required=required)
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--d", type=int, default=None, help="packing distance (pack methods)")
    p.add_argument("--rng-seed", type=int, default=0, help="seed for --method random")
    p.add_argument("--no-refine", action="store_true",
                   help="use packing elements as seeds without neighborhood refinement")
    p.add_argument("--seeds", type=_int_list, default=None,
                   help="explicit comma-separated seed labels instead of --method")


def _resolve_seeds(g, args):
    if args.seeds:
        members = tuple(g.index_of(lab) for lab in args.seeds)
        return SeedSet("explicit", len(members), members)
    if args.method is None:
        raise PackMeasureError("either --method or --seeds is required")
    return select_seeds(g, args.method, args.k, args.d, rng_seed=args.rng_seed,
                        refine=not args.no_refine, workers=args.threads)


def _emit(obj):
    print(json.dumps(obj, indent=2))


def cmd_stats(args):
    t0 = time.perf_counter()
    g = load_dataset(args.graph)
    elapsed = time.perf_counter() - t0
    deg = g.degrees
    out = {
        "vertices": g.n,
        "edges": g.m,
        "degree_min": int(deg.min()),
        "degree_max": int(deg.max()),
        "degree_mean": round(float(deg.mean()), 4),
        "degree_median": float(np.median(deg)),
        "isolated": int(np.count_nonzero(deg == 0)),
        "load_seconds": round(elapsed, 3),
    }
    out.update({f"input_{k}": v for k, v in g.load_stats.items()})
    _emit(out)


def cmd_seeds(args):
    g = load_dataset(args.graph)
    _emit(_resolve_seeds(g, args).to_json(g))


def cmd_simulate(args):
    g = load_dataset(args.graph)
    seeds = _resolve_seeds(g, args)
    est = estimate_spread(g, seeds, args.p, args.iterations, args.master_seed, args.threads)
    _emit({"seeds": seeds.to_json(g), "estimate": est.to_json()})


def cmd_steps(args):
    g = load_dataset(args.graph)
    seeds = _resolve_seeds(g, args)
    steps, unreachable = coverage_report(g, seeds)
    out = {"seeds": seeds.to_json(g), "coverage_steps": steps, "unreachable": unreachable}
    if args.radius is not None:
        cov = firehouse_coverage(g, seeds, args.radius)
        out["firehouse"] = {"radius": args.radius, "coverage": cov}
        if args.threshold is not None:
            if not 0.0 < args.threshold <= 1.0:
                raise PackMeasureError("--threshold must lie in (0, 1]")
            out["firehouse"]["threshold"] = args.threshold
            out["firehouse"]["satisfied"] = cov >= args.threshold
    _emit(out)


def cmd_generate(args):
    if args.preset:
        spec = PRESETS[args.preset]
    elif args.cliques:
        spec = SyntheticSpec(tuple(args.cliques), args.path_internal, args.rng_seed)
    else:
        raise PackMeasureError("either --preset or --cliques is required")
    g = generate_scattered_cliques(spec)
    if args.output == "-":
        write_edge_list(g, sys.stdout)
    else:
        write_edge_list(g, args.output)
        print(f"wrote {g.n} vertices, {g.m} edges to {args.output}", file=sys.stderr)


def cmd_bench(args):
    config = ExperimentConfig.from_file(args.config)
    log = None if args.quiet else (lambda msg: print(msg, file=sys.stderr))
    rows = run_experiment(config, workers=args.threads, log=log)
    outputs = config.outputs
    written = write_reports(
        rows, config,
        csv_path=args.csv or outputs.get("csv"),
        json_path=args.json or outputs.get("json"),
        timing_path=args.timing or outputs.get("timing"),
    )
    if not (args.csv or outputs.get("csv")):
        sys.stdout.write(rows_to_csv(rows))
    for path in written:
        print(f"wrote {path}", file=sys.stderr)


def build_parser():
    parser = argparse.ArgumentParser(prog="packmeasure",
                                     description="Pack-and-measure seed selection for influence maximization.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--threads", type=int, default=None,
                        help="worker count (default: $PACKMEASURE_THREADS or CPU count)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="vertex/edge counts and degree summary")
    p.add_argument("graph", help="edge-list path or synthetic:<spec>")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("seeds", help="print a seed set as JSON")
    _add_seed_args(p, required=False)
    p.add_argument("graph")
    p.set_defaults(func=cmd_seeds)

    p = sub.add_parser("simulate", help="Monte-Carlo Independent Cascade spread")
    _add_seed_args(p, required=False)
    p.add_argument("--p", type=float, default=0.01)
    p.add_argument("--iterations", type=int, default=1000)
    p.add_argument("--master-seed", type=int, default=0)
    p.add_argument("graph")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("steps", help="rounds to cover the graph when every edge fires")
    _add_seed_args(p, required=False)
    p.add_argument("--radius", type=int, default=None, help="also report coverage within this distance")
    p.add_argument("--threshold", type=float, default=None, help="fraction required by --radius check")
    p.add_argument("graph")
    p.set_defaults(func=cmd_steps)

    p = sub.add_parser("generate", help="write a clique-ring synthetic edge list")
    p.add_argument("--preset", choices=sorted(PRESETS))
    p.add_argument("--cliques", type=_int_list)
    p.add_argument("--path-internal", type=int, default=0)
    p.add_argument("--rng-seed", type=int, default=0)
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("bench", help="run an experiment sweep from a JSON config")
    p.add_argument("--config", required=True)
    p.add_argument("--csv")
    p.add_argument("--json")
    p.add_argument("--timing")
    p.add_argument("-q", "--quiet", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else 0
    try:
        args.func(args)
    except (PackMeasureError, OSError, KeyError, IndexError) as exc:
        print(f"packmeasure {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    return 0


if __name__ == "__main__":
    sys.exit(main())
