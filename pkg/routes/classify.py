from config import EXIT_OK, EXIT_VERIFICATION_FAILURE
from controllers import classify_controller
from models.run_config import OutputFormat, RunConfig
from routes.common import add_type_argument, emit, emit_json
from utils.formatting import render_classification


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser(
        "classify",
        help="derived equivalence classes of a mutation class by associated polynomial",
        parents=parents,
    )
    add_type_argument(parser)
    parser.add_argument(
        "--no-closure",
        dest="closure",
        action="store_false",
        help="skip the good-mutation closure and only group by polynomial",
    )
    parser.set_defaults(handler=handle)


def handle(cfg: RunConfig) -> int:
    report = classify_controller.classify(
        cfg.dynkin_type,
        workers=cfg.workers,
        cap=cfg.cap,
        closure=cfg.closure,
    )
    if cfg.fmt == OutputFormat.JSON:
        emit_json(report)
    else:
        emit(render_classification(report, cfg.fmt.value))
    return EXIT_VERIFICATION_FAILURE if report.passed is False else EXIT_OK
