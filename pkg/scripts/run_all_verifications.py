#!/usr/bin/env python3
"""Run every verification target and write a JSON report.

Thin driver over the library CLI: equivalent to `python -m diagonals
report --timings`, with a default output path under results/.
"""

import argparse
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from diagonals.cli import main  # noqa: E402


def parse_args() -> argparse.Namespace:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="results/verification_report.json")
    ap.add_argument("--degree-bound", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--jobs", type=int, default=1)
    return ap.parse_args()


if __name__ == "__main__":
    args = parse_args()
    os.makedirs(os.path.dirname(args.out) or ".", exist_ok=True)
    code = main([
        "report",
        "--format", "json",
        "--timings",
        "--out", args.out,
        "--degree-bound", str(args.degree_bound),
        "--seed", str(args.seed),
        "--jobs", str(args.jobs),
    ])
    print(f"report written to {args.out} (exit {code})")
    raise SystemExit(code)
