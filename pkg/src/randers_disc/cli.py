"""Command-line front end.

Subcommands: certificate, perturb, conjugate, check-metric, deficit-sweep.
Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
Reports carry a config echo sufficient to reproduce the run; files are
written atomically (write-then-rename) after all computation completes.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import math
import os
import sys
import tempfile

import numpy as np

from .config import RandersConfig, VolumeForm
from .curves import Circle
from .errors import (
    AdmissibilityError,
    BracketingError,
    ChartSingularityError,
    DomainError,
    ExhaustionError,
    IntegrationError,
    NumericalError,
    ProjectionError,
    QuadratureError,
)
from .functionals import QuadratureGrid, area, length
from .isoperimetry import PerturbationSpec, deficit_value, run_trials
from .metric import beta_covector, disc_grid, potential, yasuda_shimada_residual
from .variational import (
    LagrangeSystem,
    build_certificate,
    conjugate_scan,
    jacobi_coeffs,
    lambda_for_circle,
)
from . import fd

_YS_FLOOR = 0.1        # non-flatness floor for the max Yasuda-Shimada entry
_NORM_TOL = 1e-12      # drift one-form norm deviation allowed on the grid
_GRAD_TOL = 1e-8       # potential-gradient mismatch allowed (central differences)


@dataclasses.dataclass(frozen=True)
class RunConfig:
    """Parsed flags; defaults mirror the module defaults."""

    command: str
    a: float = 0.5
    b: float = 0.0
    form: str = "bh"
    n: int = 1024
    tol: float = 1e-6
    trials: int = 200
    epsilon: float = 0.05
    harmonics: int = 4
    seed: int = 42
    probes: int = 50
    scan_points: int = 512
    scan_steps: int = 4096
    a_min: float = 0.1
    a_max: float = 0.9
    a_count: int = 9
    output: str | None = None

    def echo(self) -> dict:
        # the output path plays no part in the computation; leaving it out
        # keeps reruns byte-identical regardless of where they are written
        d = dataclasses.asdict(self)
        d.pop("output")
        return d


def _write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd_, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", text=True)
    try:
        with os.fdopen(fd_, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.output:
        _write_atomic(cfg.output, text)
    else:
        sys.stdout.write(text)


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _csv_text(cfg: RunConfig, header: list[str], rows: list[list]) -> str:
    lines = ["# config " + json.dumps(cfg.echo(), sort_keys=True)]
    lines.append(",".join(header))
    for row in rows:
        lines.append(",".join(_fmt(v) if isinstance(v, float) else str(v) for v in row))
    return "\n".join(lines) + "\n"


def cmd_certificate(cfg: RunConfig) -> int:
    rc = RandersConfig(cfg.b, cfg.form)
    cert = build_certificate(
        cfg.a,
        rc,
        tol=cfg.tol,
        grid=QuadratureGrid(cfg.n),
        n_probes=cfg.probes,
        probe_seed=cfg.seed,
        scan_points=cfg.scan_points,
        scan_steps=cfg.scan_steps,
    )
    doc = {"config": cfg.echo(), **cert.to_json_dict()}
    _emit(cfg, json.dumps(doc, indent=2) + "\n")
    return 0 if cert.passed else 1


def cmd_perturb(cfg: RunConfig) -> int:
    rc = RandersConfig(cfg.b, cfg.form)
    spec = PerturbationSpec(
        seed=cfg.seed, harmonics=cfg.harmonics, epsilon=cfg.epsilon, count=cfg.trials
    )
    results = run_trials(cfg.a, rc, spec, QuadratureGrid(cfg.n))
    header = ["index", "a0_matched", "length", "area", "delta_area", "deficit", "ok"]
    rows = [
        [r.index, r.a0_matched, r.length, r.area, r.delta_area, r.deficit, int(r.ok)]
        for r in results
    ]
    _emit(cfg, _csv_text(cfg, header, rows))
    return 0 if all(r.ok for r in results) else 1


def cmd_conjugate(cfg: RunConfig) -> int:
    rc = RandersConfig(cfg.b, cfg.form)
    circle = Circle(cfg.a)
    system = LagrangeSystem(lambda_for_circle(cfg.a, rc), rc)
    coeffs = jacobi_coeffs(circle, system)
    report = conjugate_scan(
        circle, system, scan_points=cfg.scan_points, n_steps=cfg.scan_steps
    )
    doc = {
        "config": cfg.echo(),
        "lambda": system.lam,
        "jacobi": {"h1": coeffs.h1, "h2": coeffs.h2, "K": coeffs.K, "U": coeffs.U},
        "zero_crossing": report.zero_crossing,
        "min_abs_D": report.min_abs_D,
        "step_halving": report.step_halving,
        "c_values": report.c_values.tolist(),
        "D_values": report.D_values.tolist(),
    }
    _emit(cfg, json.dumps(doc, indent=2) + "\n")
    return 0 if not report.zero_crossing else 1


def cmd_check_metric(cfg: RunConfig) -> int:
    rc = RandersConfig(cfg.b, cfg.form)
    points = disc_grid()
    norm_dev = 0.0
    grad_dev = 0.0
    for p in points:
        beta = beta_covector(p, rc)
        s = 1.0 - float(p @ p)
        alpha_norm_beta = 0.5 * s * math.hypot(beta[0], beta[1])
        norm_dev = max(norm_dev, abs(alpha_norm_beta - rc.b))
        for i in range(2):
            def f_along(h: float, i=i, p=p) -> float:
                q = p.copy()
                q[i] += h
                return potential(q, rc)

            grad_i = fd.d1_central(f_along, 0.0, 1e-6)
            grad_dev = max(grad_dev, abs(grad_i - beta[i]))
    norm_ok = norm_dev <= _NORM_TOL
    grad_ok = grad_dev <= _GRAD_TOL
    if rc.b == 0.0:
        ys_max = None
        ys_note = "skipped (Riemannian case)"
        ys_ok = True
    else:
        ys_max = max(
            float(np.max(np.abs(yasuda_shimada_residual(p, rc)))) for p in points
        )
        ys_note = f"max residual entry over {len(points)} grid points"
        ys_ok = ys_max > _YS_FLOOR
    doc = {
        "config": cfg.echo(),
        "b": rc.b,
        "form": rc.form.value,
        "norm_deviation_max": norm_dev,
        "gradient_mismatch_max": grad_dev,
        "yasuda_shimada_max": ys_max,
        "yasuda_shimada_note": ys_note,
        "pass": bool(norm_ok and grad_ok and ys_ok),
    }
    _emit(cfg, json.dumps(doc, indent=2) + "\n")
    return 0 if doc["pass"] else 1


def cmd_deficit_sweep(cfg: RunConfig) -> int:
    if not (0.0 < cfg.a_min <= cfg.a_max < 1.0) or cfg.a_count < 1:
        raise DomainError("sweep grid must satisfy 0 < a_min <= a_max < 1 and a_count >= 1")
    grid = QuadratureGrid(cfg.n)
    header = ["a", "L", "A_bh", "A_ht", "A_max", "A_min", "deficit"]
    rows = []
    worst = 0.0
    for a in np.linspace(cfg.a_min, cfg.a_max, cfg.a_count):
        circle = Circle(float(a))
        areas = {}
        for form in VolumeForm:
            rc = RandersConfig(cfg.b, form)
            areas[form.value] = area(circle, rc, grid).value
        rc_ht = RandersConfig(cfg.b, VolumeForm.HOLMES_THOMPSON)
        L = length(circle, rc_ht, grid).value
        deficit = deficit_value(L, areas["ht"], rc_ht)
        worst = max(worst, abs(deficit))
        rows.append(
            [float(a), L, areas["bh"], areas["ht"], areas["max"], areas["min"], deficit]
        )
    _emit(cfg, _csv_text(cfg, header, rows))
    return 0 if worst <= cfg.tol else 1


_DISPATCH = {
    "certificate": cmd_certificate,
    "perturb": cmd_perturb,
    "conjugate": cmd_conjugate,
    "check-metric": cmd_check_metric,
    "deficit-sweep": cmd_deficit_sweep,
}


def _add_common(sp: argparse.ArgumentParser, *, need_a: bool, need_form: bool) -> None:
    if need_a:
        sp.add_argument("--a", type=float, default=0.5, help="circle radius in (0, 1)")
    sp.add_argument("--b", type=float, default=0.0, help="drift strength, 0 <= b < 1")
    sp.add_argument(
        "--form",
        choices=[f.value for f in VolumeForm],
        required=need_form,
        default=None if need_form else "bh",
        help="volume form",
    )
    sp.add_argument("--n", type=int, default=1024, help="quadrature nodes (power of two >= 256)")
    sp.add_argument("--tol", type=float, default=1e-6, help="verification tolerance")
    sp.add_argument("--seed", type=int, default=42, help="random seed")
    sp.add_argument("--output", type=str, default=None, help="write the report to this path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="randers-disc",
        description="Isoperimetric sufficiency checks for circles in the Randers Poincare disc.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("certificate", help="run all sufficiency checks for one circle")
    _add_common(sp, need_a=True, need_form=True)
    sp.add_argument("--probes", type=int, default=50, help="random second-variation probes")
    sp.add_argument("--scan-points", type=int, default=512, help="conjugate scan sample count")
    sp.add_argument("--scan-steps", type=int, default=4096, help="conjugate scan ODE steps")

    sp = sub.add_parser("perturb", help="length-matched perturbation trials")
    _add_common(sp, need_a=True, need_form=True)
    sp.add_argument("--trials", type=int, default=200, help="number of perturbations")
    sp.add_argument("--epsilon", type=float, default=0.05, help="coefficient scale")
    sp.add_argument("--harmonics", type=int, default=4, help="max perturbation harmonic")

    sp = sub.add_parser("conjugate", help="Jacobi determinant scan over one period")
    _add_common(sp, need_a=True, need_form=True)
    sp.add_argument("--scan-points", type=int, default=512, help="conjugate scan sample count")
    sp.add_argument("--scan-steps", type=int, default=4096, help="conjugate scan ODE steps")

    sp = sub.add_parser("check-metric", help="drift norm, potential gradient, flag-curvature residual")
    _add_common(sp, need_a=False, need_form=False)

    sp = sub.add_parser("deficit-sweep", help="isoperimetric deficit of circles over a radius grid")
    _add_common(sp, need_a=False, need_form=False)
    sp.add_argument("--a-min", type=float, default=0.1, help="sweep start radius")
    sp.add_argument("--a-max", type=float, default=0.9, help="sweep end radius")
    sp.add_argument("--a-count", type=int, default=9, help="sweep point count")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    kwargs = {k: v for k, v in vars(ns).items() if v is not None or k == "output"}
    try:
        cfg = RunConfig(**kwargs)
        return _DISPATCH[cfg.command](cfg)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (
        AdmissibilityError,
        BracketingError,
        ChartSingularityError,
        ExhaustionError,
        IntegrationError,
        NumericalError,
        ProjectionError,
        QuadratureError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
