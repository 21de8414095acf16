"""Command-line entry point: ``charsbp <experiment> [--config F] [--out D] [--workers N]``."""
from __future__ import annotations

import argparse
import csv
import logging
import sys
from pathlib import Path

import numpy as np

from . import experiments as ex
from .config import EXPERIMENTS, ConfigError, load_config


def write_csv(path: Path, header: list[str], rows: list[dict]) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=header, extrasaction="ignore")
        w.writeheader()
        for r in rows:
            w.writerow({k: repr(v) if isinstance(v, float) else v for k, v in r.items()})
    return path


def _slug(x: float) -> str:
    return f"{x:+.2f}".replace("+", "p").replace("-", "m").replace(".", "_")


def cmd_convergence1d(cfg, out: Path, workers: int):
    reps = ex.run_convergence_1d(cfg)
    rows = [r for rep in reps for r in rep.rows()]
    return [write_csv(out / "convergence1d_errors.csv", ["order", "treatment", "R", "N", "h", "error", "rate"], rows)]


def cmd_spectrum(cfg, out: Path, workers: int):
    rows, dumps = ex.run_spectrum_sweep(cfg)
    files = [write_csv(out / "spectrum.csv", ["R", "treatment", "max_neg_re_hlambda"], rows)]
    for (tr, R), ev in dumps.items():
        files.append(write_csv(out / "eigenvalues" / f"{tr}_R{_slug(R)}.csv", ["Re", "Im"],
                               [dict(Re=float(z.real), Im=float(z.imag)) for z in ev]))
    return files


def cmd_mms2d(cfg, out: Path, workers: int):
    reps = ex.run_mms_2d(cfg, workers)
    rows = [r for rep in reps for r in rep.rows()]
    return [write_csv(out / "mms2d_errors.csv", ["order", "treatment", "alpha", "N", "h", "error", "rate"], rows)]


def cmd_courant(cfg, out: Path, workers: int):
    rows, detail = ex.run_courant_sweep(cfg, workers)
    return [write_csv(out / "courant.csv", ["alpha", "treatment", "gamma_stable"], rows),
            write_csv(out / "courant_runs.csv", ["alpha", "treatment", "gamma", "error", "reference"], detail)]


def cmd_energy(cfg, out: Path, workers: int):
    files = []
    for h in ex.run_energy_dissipation(cfg, workers):
        files.append(write_csv(out / f"energy_{h.interface}_N{h.N}.csv", ["t", "E_normalized"],
                               [dict(t=float(t), E_normalized=float(e)) for t, e in zip(h.t, h.dissipated)]))
    return files


def cmd_selfconv(cfg, out: Path, workers: int):
    sc = ex.run_self_convergence(cfg, workers)
    rows = [dict(N=n, h=1.0 / n, error=d, rate=r) for n, d, r in
            zip(sc.resolutions[:-1], sc.differences, ex.convergence_rates(sc.differences))]
    return [write_csv(out / "selfconv_errors.csv", ["N", "h", "error", "rate"], rows)]


COMMANDS = {
    "convergence1d": cmd_convergence1d,
    "spectrum": cmd_spectrum,
    "mms2d": cmd_mms2d,
    "courant": cmd_courant,
    "energy": cmd_energy,
    "selfconv": cmd_selfconv,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="charsbp", description="SBP-SAT wave equation experiments")
    sub = p.add_subparsers(dest="experiment", required=True)
    for name in EXPERIMENTS:
        s = sub.add_parser(name)
        s.add_argument("--config", type=Path, default=None, help="YAML file (unknown keys are rejected)")
        s.add_argument("--out", type=Path, default=Path("results"), help="output directory")
        s.add_argument("--workers", type=int, default=1, help="threads for the volume operator")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")
    if args.workers < 1:
        print("error: --workers must be at least 1", file=sys.stderr)
        return 2
    try:
        cfg = load_config(args.config, args.experiment)
    except (ConfigError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    np.seterr(over="warn")
    for f in COMMANDS[args.experiment](cfg, args.out, args.workers):
        print(f)
    return 0


if __name__ == "__main__":
    sys.exit(main())
