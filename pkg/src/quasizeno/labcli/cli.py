"""Command-line entry point: ``quasizeno run|preset|list-presets``."""
from __future__ import annotations

import argparse
import sys

import numpy as np

from ..errors import ConfigError, QuasiZenoError
from .config import MODES, config_from_dict, load_config
from .presets import list_presets, preset_dict
from .report import emit_report
from .runner import run_experiment

EXIT_OK, EXIT_CONFIG, EXIT_NUMERIC, EXIT_IO = 0, 2, 3, 4

_OVERRIDES = {"mode": "mode", "dt": "dt", "tau": "tau", "order": "order",
              "seed": "seed", "out": "output", "format": "format",
              "stride": "stride", "trajectories": "n_trajectories"}


def _add_run_flags(p):
    p.add_argument("--mode", choices=MODES)
    p.add_argument("--dt", type=float)
    p.add_argument("--tau", type=float)
    p.add_argument("--order", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--out", help="output prefix; files are <out>.<mode>.<format>")
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--stride", type=int, help="record every N-th step")
    p.add_argument("--trajectories", type=int, help="number of sampled records")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quasizeno", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="run an experiment described by a JSON config")
    run.add_argument("config")
    _add_run_flags(run)
    preset = sub.add_parser("preset", help="run a built-in experiment")
    preset.add_argument("name")
    _add_run_flags(preset)
    sub.add_parser("list-presets", help="list built-in experiments")
    return parser


def _apply_overrides(config, args):
    data = config if isinstance(config, dict) else config.to_dict()
    data = dict(data)
    for flag, key in _OVERRIDES.items():
        value = getattr(args, flag)
        if value is not None:
            data[key] = value
    return config_from_dict(data)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "list-presets":
        for name, desc in list_presets():
            print(f"{name}\n    {desc}")
        return EXIT_OK
    try:
        if args.command == "run":
            config = _apply_overrides(load_config(args.config), args)
        else:
            config = _apply_overrides(preset_dict(args.name), args)
        with np.errstate(over="raise", invalid="raise"):
            report = run_experiment(config)
        paths = emit_report(report, config.format, config.output)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (QuasiZenoError, ArithmeticError, np.linalg.LinAlgError) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    for warning in report.metadata.get("warnings", []):
        print(f"warning: {warning}", file=sys.stderr)
    for path in paths:
        print(path)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
