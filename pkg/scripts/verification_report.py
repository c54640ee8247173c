#!/usr/bin/env python3
"""Run the full verification catalog over a delta sweep and write TSV reports."""

import argparse
import pathlib
import time

from henonlab import MapParams, emit_report, run_all


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--deltas", type=float, nargs="+", default=[2.5, 3.0, 5.0])
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--samples", type=int, default=None, help="override all suite scales")
    parser.add_argument("--outdir", default="reports")
    args = parser.parse_args()

    outdir = pathlib.Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    exit_code = 0
    for delta in args.deltas:
        t0 = time.perf_counter()
        reports = run_all(MapParams(delta), args.seed, args.samples)
        path = outdir / f"verification_delta{delta:g}_seed{args.seed}.tsv"
        emit_report(reports, path)
        failures = sum(r.failures for r in reports)
        print(
            f"{path}  {len(reports)} suites  {failures} failures  "
            f"{time.perf_counter() - t0:.1f}s"
        )
        if failures:
            exit_code = 1
    raise SystemExit(exit_code)


if __name__ == "__main__":
    main()
