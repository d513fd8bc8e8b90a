from config import EXIT_OK, EXIT_VERIFICATION_FAILURE
from controllers import catalog_controller
from models.run_config import OutputFormat, RunConfig
from routes.common import add_type_argument, emit, emit_json
from utils.formatting import render_tables


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("verify-tables", help="re-verify the published good-mutation tables", parents=parents)
    add_type_argument(parser)
    parser.set_defaults(handler=handle)


def handle(cfg: RunConfig) -> int:
    report = catalog_controller.verify_tables(cfg.dynkin_type, cfg.fixtures)
    if cfg.fmt == OutputFormat.JSON:
        emit_json({
            "type": report.dynkin_type,
            "passed": report.passed,
            "counts": report.counts(),
            "rows": [verdict.to_json_dict() for verdict in report.rows],
            "opposites": report.opposites,
            "label_polynomials": report.label_polynomials,
        })
    else:
        emit(render_tables(report))
    return EXIT_OK if report.passed else EXIT_VERIFICATION_FAILURE
