"""``states`` command line: grid sweeps, self-check suites, reconciliation report."""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from circlestates import overlaps, reconcile, wigner
from circlestates.checks import run_suite
from circlestates.fock import EVEN, ODD, TruncationPolicy
from circlestates.states import CosetLabel

EXIT_OK, EXIT_CHECK_FAILED, EXIT_BAD_CONFIG, EXIT_IO = 0, 1, 2, 3
QUANTITIES = ("circle-norm", "cylinder-norm", "coset-norm", "wigner-mm", "sector-split")
SURFACE_QUANTITIES = ("circle-norm", "cylinder-norm", "coset-norm", "sector-split")

COLUMNS = {
    "circle-norm": ["omega_abs", "phi", "series", "closed_form", "tail_bound", "abs_diff",
                    "termwise_closed_form", "direct_norm_sq"],
    "cylinder-norm": ["omega_abs", "phi", "series", "closed_form", "tail_bound", "abs_diff",
                      "g_form", "prefactor"],
    "coset-norm": ["omega_abs", "phi", "series", "closed_form", "tail_bound", "abs_diff",
                   "termwise_closed_form", "z_prime_re", "z_prime_im"],
    "wigner-mm": ["omega_abs", "series", "closed_form", "tail_bound", "abs_diff"],
    "sector-split": ["omega_abs", "phi", "even_norm_sq", "odd_norm_sq", "even_tail_bound", "odd_tail_bound"],
}


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SweepConfig:
    quantity: str
    omega_min: float
    omega_max: float
    omega_count: int
    phi_count: int = 64
    alpha: complex | None = None
    output_path: str = "-"
    format: str = "csv"
    n_max: int = 200

    def __post_init__(self):
        if self.quantity not in QUANTITIES:
            raise ConfigError(f"--quantity: unknown quantity {self.quantity!r}")
        if self.omega_count < 2:
            raise ConfigError("--omega-count: need at least 2 grid points")
        if self.quantity in SURFACE_QUANTITIES and self.phi_count < 1:
            raise ConfigError("--phi-count: need at least 1 phase")
        if not 0 <= self.omega_min <= self.omega_max:
            raise ConfigError("--omega-min/--omega-max: need 0 <= min <= max")
        if self.quantity == "wigner-mm":
            if self.omega_min <= 0 or self.omega_max > 1:
                raise ConfigError("--omega-min/--omega-max: wigner-mm needs 0 < |z| <= 1")
        elif self.omega_max >= 1:
            raise ConfigError("--omega-max: disc quantities need max < 1")
        if self.quantity == "coset-norm" and (self.alpha is None or not self.alpha.imag > 0):
            raise ConfigError("--alpha: coset-norm needs alpha with Im(alpha) > 0")
        if self.format not in ("csv", "json"):
            raise ConfigError(f"--format: unknown format {self.format!r}")

    def omega_grid(self) -> np.ndarray:
        return np.linspace(self.omega_min, self.omega_max, self.omega_count)

    def phi_grid(self) -> np.ndarray:
        return 2 * math.pi * np.arange(self.phi_count) / self.phi_count


def parse_complex(text: str) -> complex:
    """'0.5+1i', '1i', '-0.2-0.3j' -> complex."""
    try:
        return complex(text.strip().replace(" ", "").replace("i", "j"))
    except ValueError as exc:
        raise ConfigError(f"--alpha: cannot parse {text!r} as <re>+<im>i") from exc


def _diff(a, b):
    return abs(a - b)


def sweep_rows(cfg: SweepConfig):
    policy = TruncationPolicy(cfg.n_max)
    q = cfg.quantity
    if q == "wigner-mm":
        for r in cfg.omega_grid():
            yield [float(r), wigner.wigner_mm_approx(float(r)).value, None, 0.0, None]
        return
    for r in cfg.omega_grid():
        r = float(r)
        circle = overlaps.circle_total_norm_sq(r, policy) if q == "circle-norm" else None
        for phi in cfg.phi_grid():
            phi = float(phi)
            if q == "circle-norm":
                direct = overlaps.circle_total_norm_sq_direct(phi, r, policy)
                yield [r, phi, circle.series_value, circle.closed_form_value, circle.tail_bound,
                       circle.difference, circle.aux["termwise_closed_form"], direct]
            elif q == "cylinder-norm":
                res = overlaps.cylinder_total_norm_sq(r, phi, policy)
                yield [r, phi, res.series_value, None, res.tail_bound, None,
                       res.aux["g_form"], res.aux["prefactor"]]
            elif q == "coset-norm":
                lab = CosetLabel(cfg.alpha, phi, 1.0, 1.0)
                res = overlaps.coset_total_overlap(lab, r, policy=policy)
                zp = res.aux["z_prime"]
                series, quoted = res.aux["norm_sq_termwise"], res.aux["norm_sq_quoted"]
                yield [r, phi, series, quoted, res.tail_bound, _diff(series, quoted),
                       overlaps.coset_norm_sq_termwise_closed(zp), zp.real, zp.imag]
            elif q == "sector-split":
                ev = overlaps.circle_sector_overlap(phi, r, EVEN, policy)
                od = overlaps.circle_sector_overlap(phi, r, ODD, policy)
                yield [r, phi, abs(ev.series_value) ** 2, abs(od.series_value) ** 2,
                       ev.tail_bound, od.tail_bound]


def _fmt(v):
    return "" if v is None else repr(float(v))


def render(cfg: SweepConfig, rows) -> str:
    cols = COLUMNS[cfg.quantity]
    if cfg.format == "json":
        payload = {"quantity": cfg.quantity, "columns": cols,
                   "rows": [[None if v is None else float(v) for v in row] for row in rows]}
        return json.dumps(payload, indent=1) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for row in rows:
        w.writerow([_fmt(v) for v in row])
    return buf.getvalue()


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def cmd_sweep(args) -> int:
    try:
        alpha = parse_complex(args.alpha) if args.alpha is not None else None
        cfg = SweepConfig(args.quantity, args.omega_min, args.omega_max, args.omega_count,
                          args.phi_count, alpha, args.out, args.format, args.n_max)
    except ConfigError as exc:
        print(f"states sweep: error: {exc}", file=sys.stderr)
        return EXIT_BAD_CONFIG
    text = render(cfg, list(sweep_rows(cfg)))
    try:
        _write(cfg.output_path, text)
    except OSError as exc:
        print(f"states sweep: cannot write {cfg.output_path}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def cmd_check(args) -> int:
    reports = run_suite(args.suite)
    for rep in reports:
        for rec in rep.details:
            status = "PASS" if rec.passed else "FAIL"
            print(f"{status}  [{rep.suite}] {rec.name}: residual={rec.residual:.3e} tol={rec.tolerance:.1e}")
        print(f"suite {rep.suite}: {rep.passed} passed, {rep.failed} failed, "
              f"worst residual {rep.worst_residual:.3e}")
    return EXIT_OK if all(r.failed == 0 for r in reports) else EXIT_CHECK_FAILED


def cmd_reconcile(args) -> int:
    report = reconcile.build_report()
    try:
        _write(args.out, json.dumps(report, indent=1) + "\n")
    except OSError as exc:
        print(f"states reconcile: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="states", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("sweep", help="evaluate a quantity on an (|omega|, phi) grid")
    s.add_argument("--quantity", required=True, choices=QUANTITIES)
    s.add_argument("--omega-min", type=float, required=True)
    s.add_argument("--omega-max", type=float, required=True)
    s.add_argument("--omega-count", type=int, required=True)
    s.add_argument("--phi-count", type=int, default=64)
    s.add_argument("--alpha", default=None, help="complex coset parameter, e.g. 0.3+1i")
    s.add_argument("--n-max", type=int, default=200)
    s.add_argument("--out", required=True, help="output path, '-' for stdout")
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.set_defaults(func=cmd_sweep)

    c = sub.add_parser("check", help="run a self-check suite")
    c.add_argument("suite", choices=("algebra", "geometry", "overlaps", "identity", "all"))
    c.set_defaults(func=cmd_check)

    r = sub.add_parser("reconcile", help="write the formula reconciliation tables")
    r.add_argument("--out", required=True)
    r.set_defaults(func=cmd_reconcile)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"states: error: {exc}", file=sys.stderr)
        return EXIT_BAD_CONFIG
