"""
Command-line entry point.

Usage::

    langevingraph <experiment> [--config PATH] [--seed N] [--out DIR] [--verbose]

Exit codes are 0 on success, 2 for configuration and input errors and 3
for numerical failures.
"""

import argparse
import json
import sys
from typing import List, Optional

from dotenv import load_dotenv

from .graphs import EXPERIMENT_GRAPHS
from .helpers.config_schemas import EXPERIMENTS, load_config, validate_config
from .utils.data_export import to_builtin
from .utils.errors import ConfigError, NumericalError, ValidationError
from .utils.logging import get_logger, set_formatting
from .utils.prettify_exec_info import prettify_exec_info

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="langevingraph",
        description="Two-temperature Langevin experiments with CSV outputs.",
    )
    subparsers = parser.add_subparsers(dest="experiment", required=True)
    for name in EXPERIMENTS:
        summary_line = EXPERIMENT_GRAPHS[name].__doc__.strip().splitlines()[0]
        sub = subparsers.add_parser(name, help=summary_line)
        sub.add_argument("--config", help="JSON config file; defaults when omitted")
        sub.add_argument("--seed", type=int, help="overrides the config seed")
        sub.add_argument("--out", dest="output_dir", help="overrides the output directory")
        sub.add_argument("--verbose", action="store_true", help="log node progress")
    return parser


def _load(args: argparse.Namespace):
    overrides = {"seed": args.seed, "output_dir": args.output_dir}
    if args.verbose:
        overrides["verbose"] = True

    if args.config is None:
        data = {"experiment": args.experiment}
        data.update({k: v for k, v in overrides.items() if v is not None})
        config = validate_config(data)
    else:
        config = load_config(args.config, overrides)

    if config.experiment != args.experiment:
        raise ConfigError(
            f"config is for '{config.experiment}', subcommand is '{args.experiment}'",
            "experiment",
        )
    return config


def main(argv: Optional[List[str]] = None) -> int:
    load_dotenv()
    set_formatting()
    args = build_parser().parse_args(argv)

    try:
        config = _load(args)
        experiment = EXPERIMENT_GRAPHS[args.experiment](config)
        written = experiment.run()
    except (ConfigError, ValidationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except NumericalError as e:
        print(f"numerical error: {e}", file=sys.stderr)
        return EXIT_NUMERICAL

    print(json.dumps(to_builtin(experiment.summary()), indent=2, sort_keys=True))
    for path in written:
        print(path)
    logger.info("\n" + prettify_exec_info(experiment.get_execution_info()))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
