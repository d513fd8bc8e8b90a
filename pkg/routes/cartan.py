from config import EXIT_OK
from controllers import path_algebra_controller
from models.run_config import OutputFormat, RunConfig
from routes.common import add_quiver_argument, emit, emit_json, input_quiver
from utils.formatting import format_matrix


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("cartan", help="Cartan matrix of the cluster-tilted algebra", parents=parents)
    add_quiver_argument(parser)
    parser.set_defaults(handler=handle)


def handle(cfg: RunConfig) -> int:
    algebra = path_algebra_controller.build_algebra(input_quiver(cfg))
    if cfg.fmt == OutputFormat.JSON:
        emit_json({"quiver": algebra.quiver.to_text(), "cartan": algebra.cartan})
        return EXIT_OK
    emit(format_matrix(algebra.cartan))
    return EXIT_OK
