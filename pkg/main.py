import argparse
import logging
import sys
import traceback
from typing import Callable, List, Optional, Tuple

from pydantic import ValidationError

from config import DEFAULT_WORKERS, ENUMERATION_CAP, EXIT_UNEXPECTED, FIXTURES_DIR, LOG_FORMAT, LOG_LEVEL
from errors import CtiltError, QuiverParseError
from models.run_config import OutputFormat, RunConfig
from routes import cartan, catalog, classify, enumeration, export, good_mutation, invariants, relations, tables

logger = logging.getLogger(__name__)

COMMANDS = (enumeration, relations, cartan, invariants, good_mutation, classify, tables, catalog, export)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        "--report",
        dest="fmt",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.TEXT.value,
        help="output format",
    )
    common.add_argument("--workers", type=int, default=DEFAULT_WORKERS, help="worker processes")
    common.add_argument("--cap", type=int, default=ENUMERATION_CAP, help="mutation class size limit")
    common.add_argument("--fixtures", default=FIXTURES_DIR, help="directory holding e6/e7/e8 JSON fixtures")
    common.add_argument("--log-level", default=LOG_LEVEL, help="DEBUG, INFO, WARNING or ERROR")

    parser = argparse.ArgumentParser(
        prog="ctilt",
        description="Good mutations and derived equivalence of cluster-tilted algebras of Dynkin type",
    )

    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers, [common])
    return parser


def parse_config(argv: Optional[List[str]] = None) -> Tuple[RunConfig, Callable[[RunConfig], int]]:
    """Parsed and validated options with the handler of the chosen command."""
    parser = build_parser()
    try:
        namespace = vars(parser.parse_args(argv))
    except SystemExit as e:
        # argparse already printed usage
        raise QuiverParseError("Invalid command line") if e.code else e
    handler = namespace.pop("handler")
    fields = {key: value for key, value in namespace.items() if key in RunConfig.model_fields}
    try:
        return RunConfig(**fields), handler
    except ValidationError as e:
        errors = [
            f"{'.'.join(str(loc) for loc in error['loc']) or 'options'}: {error['msg']}"
            for error in e.errors()
        ]
        raise QuiverParseError("Invalid options: " + "; ".join(errors), {"errors": errors})


def run(argv: Optional[List[str]] = None) -> int:
    """Entry point; returns the process exit code."""
    try:
        cfg, handler = parse_config(argv)
    except CtiltError as e:
        sys.stderr.write(f"ctilt: {e.message}\n")
        return e.exit_code

    logging.basicConfig(
        level=getattr(logging, cfg.log_level.upper(), logging.INFO),
        format=LOG_FORMAT,
        stream=sys.stderr,
    )
    logger.debug(f"Running {cfg.command} with {cfg.model_dump(exclude_none=True)}")

    try:
        return handler(cfg)
    except CtiltError as e:
        logger.debug(f"{type(e).__name__}: {e.detail}")
        sys.stderr.write(f"ctilt: {e.message}\n")
        return e.exit_code
    except Exception as e:
        logger.error(f"Unhandled exception: {str(e)}")
        logger.error(traceback.format_exc())
        return EXIT_UNEXPECTED


if __name__ == "__main__":
    sys.exit(run())
