#!/usr/bin/env python3
"""Median |delta_area| of length-matched trials as epsilon halves.

Near a strong maximum the area deficit is quadratic in the perturbation
size, so the median should drop by about 4x per halving; the observed
ratios are printed alongside.
"""
import argparse
import sys

import numpy as np

from randers_disc import PerturbationSpec, RandersConfig, run_trials


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--a", type=float, default=0.5)
    ap.add_argument("--b", type=float, default=0.3)
    ap.add_argument("--form", default="bh", choices=["bh", "ht", "max", "min"])
    ap.add_argument("--epsilon", type=float, default=0.05, help="largest scale; halved per row")
    ap.add_argument("--levels", type=int, default=4)
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--seed", type=int, default=42)
    args = ap.parse_args()

    cfg = RandersConfig(args.b, args.form)
    medians = []
    eps = args.epsilon
    for _ in range(args.levels):
        spec = PerturbationSpec(seed=args.seed, harmonics=4, epsilon=eps, count=args.trials)
        results = run_trials(args.a, cfg, spec)
        med = float(np.median([abs(r.delta_area) for r in results]))
        ratio = medians[-1] / med if medians else float("nan")
        medians.append(med)
        print(f"eps={eps:<10.6g} median|dA|={med:.6e}  ratio={ratio:.3f}")
        eps *= 0.5
    return 0


if __name__ == "__main__":
    sys.exit(main())
