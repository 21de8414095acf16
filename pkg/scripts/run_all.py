"""Run every experiment through the CLI with the configs in ``configs/``.

Usage: python scripts/run_all.py [--quick] [--out results] [--workers 1]
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from charsbp.harness.cli import COMMANDS, main

ROOT = Path(__file__).resolve().parent.parent


def run(argv=None) -> int:
    p = argparse.ArgumentParser()
    p.add_argument("--quick", action="store_true", help="use configs/quick (seconds instead of hours)")
    p.add_argument("--out", type=Path, default=Path("results"))
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("experiments", nargs="*", default=list(COMMANDS))
    args = p.parse_args(argv)
    cfg_dir = ROOT / "configs" / ("quick" if args.quick else "")
    status = 0
    for name in args.experiments:
        rc = main([name, "--config", str(cfg_dir / f"{name}.yaml"), "--out", str(args.out / name),
                   "--workers", str(args.workers)])
        status = status or rc
    return status


if __name__ == "__main__":
    sys.exit(run())
