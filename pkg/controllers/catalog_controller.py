import logging
from functools import lru_cache
from typing import Dict, List, Optional, Set

from pydantic import ValidationError

from config import FIXTURES_DIR
from controllers import (
    invariants_controller,
    mutation_class_controller,
    path_algebra_controller,
    quiver_controller,
    tilting_controller,
)
from database import load_fixture
from errors import InvariantViolation, QuiverParseError, UnsupportedInput
from models.catalog import Catalog, CatalogGroup, OppositeFact, PrintedCartan, TableRow
from models.mutation_class import MutationClass
from models.quiver import Quiver, VertexPermutation
from models.reports import OppositeVerdict, RowVerdict, TableReport
from utils.parsing import parse_label, parse_permutation

logger = logging.getLogger(__name__)


def _resolve_printed_cartan(cls: MutationClass, printed: PrintedCartan) -> List[Quiver]:
    """Labelled members whose Cartan matrix equals the printed one, least arrow list first."""
    found = set()
    for member in cls.members:
        cartan = path_algebra_controller.build_algebra(member).cartan
        for sigma in invariants_controller.cartan_permutation_matches(cartan, printed.cartan):
            found.add(quiver_controller.relabel(member, sigma))
    if not found:
        raise InvariantViolation(
            f"No {cls.dynkin_type} quiver has the printed Cartan matrix of {printed.label}",
            {"cartan": printed.cartan},
        )
    readings = sorted(found, key=lambda q: q.arrows())
    if len(readings) > 1:
        logger.warning(
            f"{printed.label}: {len(readings)} labelled quivers share the printed Cartan matrix; "
            f"using {readings[0].to_text()}"
        )
    return readings


@lru_cache(maxsize=8)
def load_catalog(dynkin_type: str, fixtures_dir: str = FIXTURES_DIR) -> Catalog:
    """
    Published labels, quivers and tables for E6, E7 or E8.

    E6 labels come with printed Cartan matrices only and are resolved against
    the enumerated class.
    """
    try:
        name = mutation_class_controller.normalize_type(dynkin_type)
        data = load_fixture(name, fixtures_dir)
        n = mutation_class_controller.parse_dynkin_type(name)[1]
        quivers: Dict[str, List[Quiver]] = {
            label: [Quiver.from_arrows(arrows, n=n)]
            for label, arrows in data.get("quivers", {}).items()
        }
        cartans = [PrintedCartan(**entry) for entry in data.get("cartans", [])]
        if cartans:
            cls = mutation_class_controller.dynkin_class(name)
            for printed in cartans:
                quivers.setdefault(printed.label, _resolve_printed_cartan(cls, printed))

        catalog = Catalog(
            type=name,
            groups=[CatalogGroup(**group) for group in data["groups"]],
            quivers=quivers,
            cartans=cartans,
            opposites=[OppositeFact(**fact) for fact in data.get("opposites", [])],
            mutations=[TableRow(**row) for row in data.get("mutations", [])],
        )
        logger.info(
            f"Catalog {name}: {len(catalog.quivers)} labels, {len(catalog.mutations)} table rows"
        )
        return catalog
    except (InvariantViolation, UnsupportedInput):
        raise
    except (ValidationError, KeyError, ValueError) as e:
        raise QuiverParseError(f"Malformed fixture for {dynkin_type}: {str(e)}")
    except Exception as e:
        logger.error(f"Error in load_catalog: {str(e)}")
        raise


def resolve_label(text: str, fixtures_dir: str = FIXTURES_DIR) -> Quiver:
    """
    Labelled quiver for "A7@E6"; "A5^op@E8" gives the opposite.

    Raises:
        QuiverParseError: not a label reference, or an unknown label
    """
    parsed = parse_label(text)
    if parsed is None:
        raise QuiverParseError(f"Not a label reference: {text!r}")
    label, is_opposite, dynkin_type = parsed
    catalog = load_catalog(dynkin_type, fixtures_dir)
    if not catalog.has_label(label):
        raise QuiverParseError(
            f"Unknown label {label} for {dynkin_type}; known labels: {', '.join(catalog.labels())}"
        )
    quiver = catalog.quiver(label)
    return quiver_controller.opposite(quiver) if is_opposite else quiver


def match_members(cls: MutationClass, catalog: Catalog) -> Dict[int, str]:
    """Member id -> label, spreading each label over its sink/source orbit."""
    labels: Dict[int, str] = {}
    orbit_index = mutation_class_controller.orbit_index(cls)
    for label in catalog.labels():
        member = cls.member_id(quiver_controller.canonical_key(catalog.quiver(label)))
        if member is None:
            raise InvariantViolation(f"Label {label} does not occur in the {catalog.type} class")
        orbit = cls.orbits[orbit_index[member]]
        if orbit.representative in labels:
            logger.warning(
                f"Labels {labels[orbit.representative]} and {label} share a sink/source orbit"
            )
            continue
        for position in orbit.members:
            labels[position] = label
    return labels


def _labelled_orbit(quivers: List[Quiver]) -> Set[Quiver]:
    found: Set[Quiver] = set()
    for quiver in quivers:
        found.update(quiver_controller.sink_source_closure(quiver))
    return found


def _row_quivers(catalog: Catalog, label: str, is_opposite: bool) -> List[Quiver]:
    readings = catalog.alternatives(label)
    if is_opposite:
        return [quiver_controller.opposite(q) for q in readings]
    return readings


def verify_table_row(cls: MutationClass, catalog: Catalog, row: TableRow) -> RowVerdict:
    """
    Certify one table row.

    Candidates are the stated source and its labelled sink/source orbit. A
    candidate qualifies when T_vertex has the stated summands, the mutation is
    good and mu_vertex(candidate) lies in the target's sink/source orbit.
    """
    if not (catalog.has_label(row.source) and catalog.has_label(row.target)):
        logger.warning(f"Skipping {row.describe()}: label not in the {catalog.type} catalog")
        return RowVerdict(row=row, status="unresolved", message="label not in catalog")

    try:
        sources = _row_quivers(catalog, row.source, row.source_op)
        targets = _row_quivers(catalog, row.target, row.target_op)
        orbit_index = mutation_class_controller.orbit_index(cls)
        target_member = cls.member_id(quiver_controller.canonical_key(targets[0]))
        if target_member is None:
            logger.warning(f"{row.describe()}: target {row.target} is not in the {catalog.type} class")
            return RowVerdict(row=row, status="failed", message=f"target {row.target} is not in the {catalog.type} class")
        target_orbit = orbit_index[target_member]
        labelled_targets = _labelled_orbit(targets)

        candidates: List[Quiver] = []
        for source in sources:
            for quiver in quiver_controller.sink_source_closure(source):
                if quiver not in candidates:
                    candidates.append(quiver)

        sigma: Optional[VertexPermutation] = None
        if row.permutation:
            sigma = parse_permutation(row.permutation, cls.n)

        reasons = []
        fallback: Optional[RowVerdict] = None
        for candidate in candidates:
            if sorted(candidate.in_neighbors(row.vertex)) != sorted(row.targets):
                continue
            verdict = tilting_controller.is_good_mutation(candidate, row.vertex)
            if not verdict.is_good:
                reasons.append(f"{candidate.to_text()}: {verdict.kind.value}")
                continue
            mutated_member = cls.member_id(quiver_controller.canonical_key(verdict.mutated))
            if mutated_member is None or orbit_index[mutated_member] != target_orbit:
                reasons.append(f"{candidate.to_text()}: mutation lands outside the target orbit")
                continue

            adjusted = candidate not in sources
            if sigma is None:
                return RowVerdict(row=row, status="good", candidate=candidate, adjusted=adjusted)
            for direction, permutation in (("forward", sigma), ("inverse", sigma.inverse())):
                if quiver_controller.relabel(verdict.mutated, permutation) in labelled_targets:
                    return RowVerdict(
                        row=row,
                        status="good",
                        candidate=candidate,
                        adjusted=adjusted,
                        direction=direction,
                        permutation_matched=True,
                    )
            if fallback is None:
                fallback = RowVerdict(
                    row=row,
                    status="good",
                    candidate=candidate,
                    adjusted=adjusted,
                    permutation_matched=False,
                    message="target class matches; stated permutation does not",
                )

        if fallback is not None:
            logger.warning(f"{row.describe()}: permutation not matched in either direction")
            return fallback
        if not reasons:
            reasons.append(f"no candidate has incoming arrows from {row.targets} at {row.vertex}")
        return RowVerdict(row=row, status="failed", message="; ".join(reasons))
    except (InvariantViolation, UnsupportedInput):
        raise
    except Exception as e:
        logger.error(f"Error in verify_table_row: {str(e)}")
        raise


def verify_opposites(cls: MutationClass, catalog: Catalog) -> List[OppositeVerdict]:
    orbit_index = mutation_class_controller.orbit_index(cls)
    verdicts = []
    for fact in catalog.opposites:
        if not (catalog.has_label(fact.label) and catalog.has_label(fact.partner)):
            logger.warning(f"Skipping opposite pair {fact.label}/{fact.partner}: label not in catalog")
            continue
        flipped = quiver_controller.opposite(catalog.quiver(fact.label))
        partner = catalog.quiver(fact.partner)
        if fact.relation == "equal":
            holds = quiver_controller.is_isomorphic(flipped, partner)
        else:
            first = cls.member_id(quiver_controller.canonical_key(flipped))
            second = cls.member_id(quiver_controller.canonical_key(partner))
            holds = first is not None and second is not None and orbit_index[first] == orbit_index[second]
        if not holds:
            logger.warning(f"Opposite of {fact.label} is not {fact.relation} to {fact.partner}")
        verdicts.append(
            OppositeVerdict(label=fact.label, partner=fact.partner, relation=fact.relation, holds=holds)
        )
    return verdicts


def check_label_polynomials(catalog: Catalog) -> List[Dict[str, str]]:
    """Labels whose computed associated polynomial differs from the published one."""
    mismatches = []
    for label in catalog.labels():
        expected = catalog.polynomial_of(label)
        if expected is None:
            continue
        cartan = path_algebra_controller.build_algebra(catalog.quiver(label)).cartan
        computed = str(invariants_controller.associated_polynomial(cartan))
        if computed != expected:
            mismatches.append({"label": label, "expected": expected, "computed": computed})
    return mismatches


def verify_tables(dynkin_type: str, fixtures_dir: str = FIXTURES_DIR) -> TableReport:
    """Every table row, every opposite pairing and every label polynomial of one type."""
    catalog = load_catalog(dynkin_type, fixtures_dir)
    cls = mutation_class_controller.dynkin_class(catalog.type)
    rows = []
    for row in catalog.mutations:
        verdict = verify_table_row(cls, catalog, row)
        if verdict.status == "failed":
            logger.warning(f"Row failed: {row.describe()}: {verdict.message}")
        rows.append(verdict)
    report = TableReport(
        dynkin_type=catalog.type,
        rows=rows,
        opposites=verify_opposites(cls, catalog),
        label_polynomials=check_label_polynomials(catalog),
    )
    logger.info(f"{catalog.type} tables: {report.counts()}")
    return report
