from config import EXIT_OK
from controllers import catalog_controller, mutation_class_controller
from models.run_config import OutputFormat, RunConfig
from routes.common import add_type_argument, emit, emit_json
from utils.formatting import markdown_table, tsv_table


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("catalog", help="published labels with their quivers and polynomials", parents=parents)
    add_type_argument(parser)
    parser.set_defaults(handler=handle)


def handle(cfg: RunConfig) -> int:
    catalog = catalog_controller.load_catalog(cfg.dynkin_type, cfg.fixtures)
    cls = mutation_class_controller.dynkin_class(catalog.type, cap=cfg.cap, workers=cfg.workers)
    members = catalog_controller.match_members(cls, catalog)
    rows = []
    for label in catalog.labels():
        ids = sorted(member for member, owner in members.items() if owner == label)
        rows.append([
            label,
            catalog.polynomial_of(label) or "",
            catalog.quiver(label).to_text(),
            " ".join(str(member) for member in ids),
        ])

    header = ("label", "polynomial", "quiver", "members")
    if cfg.fmt == OutputFormat.JSON:
        emit_json([dict(zip(header, row)) for row in rows])
    elif cfg.fmt == OutputFormat.TSV:
        emit(tsv_table(header, rows))
    else:
        emit(markdown_table(header, rows))
    return EXIT_OK
