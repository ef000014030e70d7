#!/usr/bin/env python3
"""Download the SNAP collaboration networks used by the benchmark configs.

    python scripts/fetch_datasets.py [--dest data]

Each file is checked by parsing it (vertex/edge counts) and its SHA-256 is
recorded in ``<dest>/SHA256SUMS``.  On later runs an existing SHA256SUMS is
enforced, so a changed upstream file is reported instead of used silently.
"""
import argparse
import hashlib
import sys
import urllib.request
from pathlib import Path

from packmeasure import load_edge_list

DATASETS = {
    "ca-GrQc.txt.gz": ("https://snap.stanford.edu/data/ca-GrQc.txt.gz", 5242, 14496),
    "ca-AstroPh.txt.gz": ("https://snap.stanford.edu/data/ca-AstroPh.txt.gz", 18772, 198110),
}


def sha256(path):
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            h.update(chunk)
    return h.hexdigest()


def read_sums(path):
    if not path.exists():
        return {}
    sums = {}
    for line in path.read_text().splitlines():
        digest, name = line.split(maxsplit=1)
        sums[name.strip()] = digest
    return sums


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--dest", default="data")
    args = parser.parse_args(argv)
    dest = Path(args.dest)
    dest.mkdir(parents=True, exist_ok=True)
    sums_path = dest / "SHA256SUMS"
    sums = read_sums(sums_path)
    status = 0
    for name, (url, n, m) in DATASETS.items():
        path = dest / name
        if not path.exists():
            print(f"downloading {url}")
            urllib.request.urlretrieve(url, path)
        digest = sha256(path)
        if name in sums and sums[name] != digest:
            print(f"{name}: checksum mismatch (recorded {sums[name]}, got {digest})", file=sys.stderr)
            status = 1
            continue
        sums[name] = digest
        g = load_edge_list(path)
        ok = (g.n, g.m) == (n, m)
        print(f"{name}: {g.n} vertices, {g.m} edges {'ok' if ok else f'(expected {n}/{m})'} "
              f"{g.load_stats}")
        status |= not ok
    sums_path.write_text("".join(f"{d}  {name}\n" for name, d in sorted(sums.items())))
    return status


if __name__ == "__main__":
    sys.exit(main())
