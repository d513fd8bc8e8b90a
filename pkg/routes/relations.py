from config import EXIT_OK
from controllers import relations_controller
from models.run_config import OutputFormat, RunConfig
from routes.common import add_quiver_argument, emit, emit_json, input_quiver


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("relations", help="zero and commutativity relations", parents=parents)
    add_quiver_argument(parser)
    parser.set_defaults(handler=handle)


def handle(cfg: RunConfig) -> int:
    q = input_quiver(cfg)
    relations = relations_controller.synthesize(q)
    if cfg.fmt == OutputFormat.JSON:
        emit_json(relations)
        return EXIT_OK
    emit("\n".join(relations.to_lines()) or "no relations")
    return EXIT_OK
