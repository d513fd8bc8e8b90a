import logging
from typing import Optional, Tuple

from config import EXIT_OK, EXIT_VERIFICATION_FAILURE
from controllers import catalog_controller, path_algebra_controller, quiver_controller, tilting_controller
from errors import QuiverParseError
from models.complexes import GoodMutationVerdict
from models.quiver import Quiver
from models.run_config import OutputFormat, RunConfig
from routes.common import add_quiver_argument, emit, emit_json, input_quiver, label_type
from utils.formatting import format_matrix
from utils.parsing import parse_label, parse_permutation

logger = logging.getLogger(__name__)


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser(
        "verify-good-mutation",
        help="decide whether the mutation at a vertex is good",
        parents=parents,
    )
    add_quiver_argument(parser, positional=False)
    parser.add_argument("--vertex", type=int, required=True, help="vertex to mutate at (1-based)")
    parser.add_argument("--expect", help="expected target label, e.g. A8 or A8^op@E6")
    parser.add_argument("--perm", dest="permutation", help='expected relabeling in cycle notation, e.g. "(2,3)"')
    parser.set_defaults(handler=handle)


def _expected_quiver(cfg: RunConfig) -> Quiver:
    text = cfg.expect.strip()
    if parse_label(text) is None:
        dynkin_type = label_type(cfg)
        if dynkin_type is None or "@" in text:
            raise QuiverParseError(f"Cannot resolve expected label {cfg.expect!r}; use the form A8@E6")
        text = f"{text}@{dynkin_type}"
    return catalog_controller.resolve_label(text, cfg.fixtures)


def check_expectation(
    verdict: GoodMutationVerdict,
    expected: Quiver,
    permutation_text: Optional[str],
) -> Tuple[bool, Optional[str]]:
    """
    Whether mu_k(Q) lies in the sink/source orbit of the expected quiver, and
    the direction ("forward" or "inverse") in which a stated relabeling holds.
    """
    closure = quiver_controller.sink_source_closure(expected)
    keys = {quiver_controller.canonical_key(q) for q in closure}
    in_orbit = quiver_controller.canonical_key(verdict.mutated) in keys
    if not in_orbit or permutation_text is None:
        return in_orbit, None

    sigma = parse_permutation(permutation_text, expected.n)
    labelled = set(closure)
    for direction, permutation in (("forward", sigma), ("inverse", sigma.inverse())):
        if quiver_controller.relabel(verdict.mutated, permutation) in labelled:
            return True, direction
    logger.warning(f"Stated permutation {permutation_text} matches in neither direction")
    return True, None


def handle(cfg: RunConfig) -> int:
    q = input_quiver(cfg)
    algebra = path_algebra_controller.build_algebra(q)
    verdict = tilting_controller.is_good_mutation(algebra, cfg.vertex)
    candidate = tilting_controller.build_mutation_complex(algebra, cfg.vertex)
    mismatches = tilting_controller.happel_check(candidate) if verdict.is_good else []

    in_orbit, direction = True, None
    if cfg.expect is not None:
        in_orbit, direction = check_expectation(verdict, _expected_quiver(cfg), cfg.permutation)
    matched = in_orbit and (cfg.permutation is None or direction is not None)
    ok = verdict.is_good and matched and not mismatches

    if cfg.fmt == OutputFormat.JSON:
        data = verdict.to_json_dict()
        data.update({
            "quiver": q.to_text(),
            "happel_mismatches": [list(m) for m in mismatches],
            "expected": cfg.expect,
            "in_expected_orbit": in_orbit if cfg.expect is not None else None,
            "permutation_direction": direction,
            "passed": ok,
        })
        emit_json(data)
        return EXIT_OK if ok else EXIT_VERIFICATION_FAILURE

    emit(f"T_{cfg.vertex} = {verdict.shorthand}")
    emit(f"verdict: {verdict.kind.value}")
    if verdict.reason:
        emit(f"reason: {verdict.reason}")
    for pair in verdict.failing:
        emit(f"nonzero Hom(T_{pair[0]}, T_{pair[1]}[{pair[2]}])")
    emit(f"mutated quiver: {verdict.mutated.to_text()}")
    if verdict.permutation is not None:
        emit(f"relabeling: {verdict.permutation.to_cycle_text()}")
    if verdict.endomorphism_cartan is not None:
        emit("endomorphism Cartan matrix:")
        emit(format_matrix(verdict.endomorphism_cartan))
    for mismatch in mismatches:
        emit(f"Euler form mismatch at {mismatch}")
    if cfg.expect is not None:
        emit(f"expected {cfg.expect}: {'matched' if in_orbit else 'not matched'}")
        if cfg.permutation is not None:
            emit(f"permutation {cfg.permutation}: {direction or 'not matched'}")
    return EXIT_OK if ok else EXIT_VERIFICATION_FAILURE
