"""Command-line interface.

Subcommands:
    run <config.json>     build one experiment and write its report bundle
    sweep <spec.json>     run a seeded sweep and aggregate a CSV
    inspect <file>        print a summary of a function/matrix CSV or report
    schema                print the published config schema as JSON

Exit codes: 0 success, 2 validation error, 3 numerical precondition failure.
Worker count for sweeps comes from --workers, else the LFWP_WORKERS
environment variable, else 1.
"""

from __future__ import annotations

import argparse
import sys

from .config import CONFIG_SCHEMA, load_config, load_sweep
from .errors import (
    ConfigError,
    DegenerateInputError,
    GridExactnessError,
    ParseError,
    PreconditionError,
    SpecMismatchError,
    WindowError,
)
from .runner import inspect_file, run_experiment, run_sweep
from .serialize import dumps_stable

VALIDATION_ERRORS = (ConfigError, ParseError, SpecMismatchError)
NUMERICAL_ERRORS = (PreconditionError, WindowError, GridExactnessError, DegenerateInputError)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lfwp",
        description="Wave packet frame experiments on local fields of positive characteristic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run one experiment config")
    run_p.add_argument("config", help="experiment config JSON")
    run_p.add_argument("--out", help="output directory (overrides config)")
    run_p.add_argument("--workers", type=int, default=None, help=argparse.SUPPRESS)

    sweep_p = sub.add_parser("sweep", help="run a sweep spec")
    sweep_p.add_argument("spec", help="sweep spec JSON")
    sweep_p.add_argument("--out", help="output directory (overrides spec)")
    sweep_p.add_argument("--workers", type=int, default=None, help="concurrent instances")

    inspect_p = sub.add_parser("inspect", help="summarize a produced file")
    inspect_p.add_argument("file")

    sub.add_parser("schema", help="print the config schema")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "run":
            config = load_config(args.config)
            result = run_experiment(config, out_dir=args.out)
            print(f"wrote {len(result['outputs'])} files to {result['outDir']}")
            for report in result["reports"]:
                print(
                    f"  {report['theoremId']}: condition={report['verdictCondition']} "
                    f"frame={report['verdictFrame']} consistent={report['consistent']}"
                )
        elif args.command == "sweep":
            spec = load_sweep(args.spec)
            summary = run_sweep(spec, out_dir=args.out, workers=args.workers)
            print(
                f"ran {summary['instances']} instances "
                f"({summary['errors']} errors) with {summary['workers']} worker(s)"
            )
            for check, count in summary["violations"].items():
                print(f"  {check}: {count} violations")
        elif args.command == "inspect":
            print(inspect_file(args.file))
        elif args.command == "schema":
            print(dumps_stable(CONFIG_SCHEMA), end="")
    except VALIDATION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NUMERICAL_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
