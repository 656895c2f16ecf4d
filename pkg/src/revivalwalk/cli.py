"""Command-line surface.

Subcommands::

    coin-build       build the configured coin, emit its matrix
    coin-order       smallest power of the coin equal to the identity
    walk-run         full trajectory record (optionally + probability CSV)
    walk-period      revival search only
    spectrum         momentum-space eigenvalue sweep
    reproduce-table  replay a bundled golden walk against its frozen table

Exit codes: 0 success (or PASS), 1 golden-table FAIL, 2 config error.
JSON records go to --out when given, else stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .config import ConfigError, build_coin, build_instance, load_config
from .engine import detect_revival
from .golden import reproduce_table
from .linalg import matrix_order
from .records import probability_csv, run_spectrum, run_walk

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_CONFIG = 2


def _emit(record: dict, out: str | None) -> None:
    text = json.dumps(record, indent=2) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)


def _cmd_coin_build(args) -> int:
    config = load_config(args.config)
    coin = build_coin(config)
    record = {
        "schema_version": 1,
        "kind": coin.kind.value,
        "n": coin.n,
        "matrix": [
            [{"re": v.real, "im": v.imag} for v in row] for row in np.asarray(coin.matrix)
        ],
    }
    if coin.phases is not None:
        record["phases"] = list(coin.phases)
    if coin.cycle_length is not None:
        record["cycle_length"] = coin.cycle_length
    _emit(record, args.out)
    return EXIT_OK


def _cmd_coin_order(args) -> int:
    config = load_config(args.config)
    coin = build_coin(config)
    order = matrix_order(coin.matrix, args.max_order, config.tolerances.mat)
    _emit(
        {
            "schema_version": 1,
            "order": order,
            "max_order": args.max_order,
            "tolerance": config.tolerances.mat,
        },
        args.out,
    )
    return EXIT_OK


def _cmd_walk_run(args) -> int:
    config = load_config(args.config)
    record = run_walk(config)
    _emit(record, args.out)
    if args.csv is not None:
        with open(args.csv, "w", encoding="utf-8", newline="") as handle:
            handle.write(probability_csv(record))
    return EXIT_OK


def _cmd_walk_period(args) -> int:
    config = load_config(args.config)
    instance = build_instance(config)
    report = detect_revival(instance, config.max_steps, config.revival_mode)
    _emit(
        {
            "schema_version": 1,
            "period": report.period,
            "mode": report.mode.value,
            "max_steps": config.max_steps,
            "fidelity_series": list(report.fidelity_series),
            "distance_series": list(report.distance_series),
        },
        args.out,
    )
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    config = load_config(args.config)
    record = run_spectrum(config, args.samples, seed=args.seed)
    _emit(record, args.out)
    return EXIT_OK


def _cmd_reproduce_table(args) -> int:
    comparison = reproduce_table(args.which)
    _emit(comparison.to_record(), args.out)
    return EXIT_OK if comparison.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="revivalwalk",
        description="Coined lattice walks with coins engineered for exact revivals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, config=True):
        p = sub.add_parser(name, help=help_text)
        if config:
            p.add_argument("--config", required=True, help="path to a JSON walk config")
        p.add_argument("--out", default=None, help="write the JSON record here instead of stdout")
        p.set_defaults(func=func)
        return p

    add("coin-build", _cmd_coin_build, "build the configured coin and emit its matrix")
    p = add("coin-order", _cmd_coin_order, "find the coin's matrix order")
    p.add_argument("--max-order", type=int, default=128, help="largest power to try")
    p = add("walk-run", _cmd_walk_run, "run the walk, dumping every state")
    p.add_argument("--csv", default=None, help="also write a per-step probability CSV here")
    add("walk-period", _cmd_walk_period, "search for the revival period")
    p = add("spectrum", _cmd_spectrum, "sweep the momentum propagator's eigenvalues")
    p.add_argument("--samples", type=int, default=10, help="number of momentum samples")
    p.add_argument("--seed", type=int, default=None, help="override the config's sampling seed")
    p = add("reproduce-table", _cmd_reproduce_table,
            "replay a bundled golden walk against its frozen amplitudes", config=False)
    p.add_argument("--which", type=int, required=True, choices=(1, 2, 3),
                   help="which bundled walk to replay")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except FileNotFoundError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
