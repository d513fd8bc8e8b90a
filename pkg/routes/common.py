import logging
import sys
from typing import Any, Optional

from controllers import catalog_controller
from database import dumps
from errors import QuiverParseError
from models.quiver import Quiver
from models.run_config import RunConfig
from utils.parsing import parse_label, parse_quiver

logger = logging.getLogger(__name__)


def add_quiver_argument(parser, positional: bool = True) -> None:
    help_text = 'arrow tuples "(1,2), (2,3)", JSON {"n":..,"arrows":..}, or a label such as A7@E6'
    if positional:
        parser.add_argument("quiver", nargs="?", help=help_text)
    else:
        parser.add_argument("--quiver", help=help_text)
    parser.add_argument("--file", dest="quiver_file", help="read the quiver from a file")


def add_type_argument(parser, required: bool = True) -> None:
    parser.add_argument("--type", dest="dynkin_type", required=required, help="Dynkin type, e.g. E6")


def input_quiver(cfg: RunConfig) -> Quiver:
    """The quiver named by the config: inline text, a file, or a label."""
    if cfg.quiver_file is not None:
        try:
            with open(cfg.quiver_file, "r", encoding="utf-8") as handle:
                return parse_quiver(handle.read())
        except OSError as e:
            raise QuiverParseError(f"Cannot read {cfg.quiver_file}: {str(e)}")
    if cfg.quiver is None:
        raise QuiverParseError("No quiver given")
    if parse_label(cfg.quiver) is not None:
        return catalog_controller.resolve_label(cfg.quiver, cfg.fixtures)
    return parse_quiver(cfg.quiver)


def label_type(cfg: RunConfig) -> Optional[str]:
    """Dynkin type of a label input, if the quiver was given as one."""
    if cfg.quiver is None:
        return None
    parsed = parse_label(cfg.quiver)
    return parsed[2] if parsed else None


def emit(text: str) -> None:
    sys.stdout.write(text.rstrip("\n") + "\n")


def emit_json(data: Any) -> None:
    emit(dumps(data).decode("utf-8"))
