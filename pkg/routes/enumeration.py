from config import EXIT_OK
from controllers import classify_controller, mutation_class_controller
from database import write_json
from errors import QuiverParseError
from models.run_config import OutputFormat, RunConfig
from routes.common import add_quiver_argument, add_type_argument, emit, emit_json, input_quiver


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("enumerate", help="mutation class of a Dynkin type or quiver", parents=parents)
    add_type_argument(parser, required=False)
    add_quiver_argument(parser)
    parser.add_argument("--orbits", dest="show_orbits", action="store_true", help="list the sink/source orbits")
    parser.add_argument(
        "--json",
        dest="json_out",
        metavar="FILE",
        help="write members, edges, orbits and label matches to FILE",
    )
    parser.set_defaults(handler=handle)


def handle(cfg: RunConfig) -> int:
    """
    Enumerate a mutation class
    """
    if cfg.dynkin_type and cfg.has_quiver():
        raise QuiverParseError("Give either --type or a quiver, not both")
    if cfg.dynkin_type:
        cls = mutation_class_controller.dynkin_class(cfg.dynkin_type, cap=cfg.cap, workers=cfg.workers)
    else:
        seed = input_quiver(cfg)
        cls = mutation_class_controller.enumerate_class(
            seed, cap=cfg.cap, workers=cfg.workers, dynkin=False
        )

    document = classify_controller.class_document(cls, cfg.fixtures)
    if cfg.json_out:
        write_json(cfg.json_out, document)

    connected = mutation_class_controller.is_connected(cls)
    if cfg.fmt == OutputFormat.JSON:
        data = {
            "type": cls.dynkin_type,
            "size": len(cls),
            "orbits": len(cls.orbits),
            "connected": connected,
            "members": [q.to_text() for q in cls.members],
        }
        if cfg.show_orbits:
            data["orbit_partition"] = [orbit.members for orbit in cls.orbits]
        emit_json(data)
        return EXIT_OK

    emit(f"{cls.dynkin_type or 'class'}: {len(cls)} quivers, {len(cls.orbits)} sink/source orbits")
    labels = {entry["id"]: entry["label"] for entry in document["members"]}
    if cfg.show_orbits:
        for orbit in cls.orbits:
            named = sorted({labels[m] for m in orbit.members if labels[m]}, key=lambda label: int(label[1:]))
            suffix = f"\t{', '.join(named)}" if named else ""
            emit(f"orbit {orbit.id}\trepresentative {orbit.representative}\t{orbit.members}{suffix}")
    else:
        for entry in document["members"]:
            label = f"\t{entry['label']}" if entry["label"] else ""
            emit(f"{entry['id']}\torbit {entry['orbit']}\t{entry['quiver']}{label}")
    if not connected:
        emit("warning: mutation graph is not connected")
    if cfg.json_out:
        emit(f"wrote {len(cls)} quivers to {cfg.json_out}")
    return EXIT_OK
