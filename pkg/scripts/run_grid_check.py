#!/usr/bin/env python3
"""Sweep the verification grids and print per-class worst residuals.

Example:
  python3 scripts/run_grid_check.py
  python3 scripts/run_grid_check.py --grid small --tol 1e-10
"""

import argparse
import sys
import time

from paralie.cli import (
    COORD_GRID,
    PARAM_GRID,
    ROUNDTRIP_GRID,
    SMALL_COORD_GRID,
    SMALL_PARAM_GRID,
    run_exp_grid,
    run_roundtrip_grid,
)
from paralie.structure import CLASS_IDS


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--grid", choices=("small", "full"), default="full")
    ap.add_argument("--tol", type=float, default=1e-12)
    args = ap.parse_args()

    if args.grid == "small":
        params, coords, rt = SMALL_PARAM_GRID, SMALL_COORD_GRID, SMALL_PARAM_GRID
    else:
        params, coords, rt = PARAM_GRID, COORD_GRID, ROUNDTRIP_GRID

    t0 = time.perf_counter()
    exp_res = run_exp_grid(params, coords)
    t1 = time.perf_counter()
    rt_res = run_roundtrip_grid(rt)
    t2 = time.perf_counter()

    n = len(CLASS_IDS) * len(params) ** 2 * len(coords) ** 3
    print(f"exponential grid: {n} instances in {t1 - t0:.2f}s")
    for cid in CLASS_IDS:
        print(f"  {cid:<4} {exp_res[cid]:.3e}")
    print(f"round-trip grid in {t2 - t1:.2f}s")
    for cid in CLASS_IDS:
        print(f"  {cid:<4} {rt_res[cid]:.3e}")

    worst = max(max(exp_res.values()), max(rt_res.values()))
    print(f"worst overall: {worst:.3e} (tol {args.tol:g})")
    return 0 if worst <= args.tol else 1


if __name__ == "__main__":
    sys.exit(main())
