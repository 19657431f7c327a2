# File: main.py
"""Main entry point for the exactla command line"""
import argparse
import sys
from typing import List, Optional

from config.settings import ConfigManager
from core.exceptions import ConfigurationError, DimensionMismatch, ExactLAError, ParseError
from core.models import CommandType, JobConfig, SolveMode
from orchestration.coordinator import EXIT_INPUT_ERROR, JobCoordinator
from rings.factory import get_available_rings
from solvers.backends import SolverFactory
from utils.logger import get_logger, setup_logging


def _sizes(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"sizes must be comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exactla",
        description="Exact linear algebra over Z and F_p[x]",
    )
    parser.add_argument("command", choices=[c.value for c in CommandType])
    parser.add_argument("matrix", nargs="?", help="A matrix file")
    parser.add_argument("rhs", nargs="?", help="c vector file (solve only)")
    parser.add_argument("--ring", default="z", help=f"one of {', '.join(get_available_rings())}")
    parser.add_argument("--mode", choices=[m.value for m in SolveMode], default=SolveMode.RATIONAL.value)
    parser.add_argument("--method", choices=SolverFactory.get_available_methods(), default=None)
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--max-iters", type=int, default=None)
    parser.add_argument("--sizes", type=_sizes, default=None, help="bench orders, e.g. 4,8,16")
    parser.add_argument("--non-powers", action="store_true", help="allow bench orders that are not powers of two")
    parser.add_argument("--out", default=None, help="write the result here instead of stdout")
    parser.add_argument("--config", default=None, help="YAML configuration file")
    parser.add_argument("--log-level", default=None)
    return parser


class ExactLAApp:
    """Main application class"""

    def __init__(self, config_path: Optional[str] = None, log_level: Optional[str] = None):
        self.config_manager = ConfigManager(config_path)
        self.config = self.config_manager.load_config()

        # Setup logging
        logging_config = self.config_manager.get_logging_config()
        if log_level:
            logging_config['level'] = log_level
        setup_logging(logging_config)
        self.logger = get_logger('main')

        self.coordinator = JobCoordinator(self.config_manager)

    def run(self, job: JobConfig) -> int:
        result = self.coordinator.run(job)
        return result['exit_code']


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run one job and return the exit status"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT_ERROR if e.code else 0

    try:
        job = JobConfig.from_dict(dict(
            command=args.command,
            ring=args.ring,
            mode=args.mode,
            method=args.method,
            seed=args.seed,
            max_iters=args.max_iters,
            matrix_path=args.matrix,
            rhs_path=args.rhs,
            output_path=args.out,
            sizes=args.sizes or [],
            non_powers=args.non_powers,
        ))
        app = ExactLAApp(args.config, args.log_level)
        return app.run(job)

    except (ConfigurationError, ParseError, DimensionMismatch) as e:
        print(f"Input error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except ExactLAError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except KeyboardInterrupt:
        print("Stopped by user", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
