#!/usr/bin/env python3
"""Run extremality certificates over a (radius, drift, form) grid.

Prints one line per grid point with the headline numbers; exits nonzero if
any certificate fails.
"""
import argparse
import sys
import time

from randers_disc import RandersConfig, VolumeForm, build_certificate


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--radii", type=float, nargs="+", default=[0.2, 0.5, 0.8])
    ap.add_argument("--drifts", type=float, nargs="+", default=[0.0, 0.3, 0.7])
    ap.add_argument("--probes", type=int, default=50)
    ap.add_argument("--seed", type=int, default=42)
    args = ap.parse_args()

    failures = 0
    t0 = time.time()
    for a in args.radii:
        for b in args.drifts:
            for form in VolumeForm:
                cfg = RandersConfig(b, form)
                cert = build_certificate(a, cfg, n_probes=args.probes, probe_seed=args.seed)
                status = "pass" if cert.passed else "FAIL"
                print(
                    f"a={a:<4} b={b:<4} form={form.value:<4} {status}  "
                    f"lam={cert.lam:+.6f}  el={cert.el_residual_max:.2e}  "
                    f"E_max={cert.weierstrass_max:+.3e}  J''_max={cert.second_variation_max:+.3e}  "
                    f"minD={cert.conjugate.min_abs_D:.3e}"
                )
                failures += 0 if cert.passed else 1
    print(f"# {time.time() - t0:.1f}s, {failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
