import logging

from config import EXIT_OK
from controllers import classify_controller, mutation_class_controller
from database import write_json
from errors import QuiverParseError
from models.run_config import RunConfig
from routes.common import add_type_argument, emit

logger = logging.getLogger(__name__)


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("export", help="write a mutation class with its invariants as JSON", parents=parents)
    add_type_argument(parser)
    parser.add_argument("--out", required=True, help="output file")
    parser.set_defaults(handler=handle)


def handle(cfg: RunConfig) -> int:
    if not cfg.out:
        raise QuiverParseError("export needs --out")
    cls = mutation_class_controller.dynkin_class(cfg.dynkin_type, cap=cfg.cap, workers=cfg.workers)
    write_json(cfg.out, classify_controller.class_document(cls, cfg.fixtures, invariants=True))
    logger.info(f"Exported {len(cls)} quivers to {cfg.out}")
    emit(f"wrote {len(cls)} quivers of {cls.dynkin_type} to {cfg.out}")
    return EXIT_OK
