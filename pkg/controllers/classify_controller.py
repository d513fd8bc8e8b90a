import logging
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from networkx.utils import UnionFind

from config import ENUMERATION_CAP, FIXTURES_DIR, SUPPORTED_FIXTURE_TYPES
from controllers import (
    catalog_controller,
    invariants_controller,
    mutation_class_controller,
    path_algebra_controller,
    quiver_controller,
    tilting_controller,
)
from models.mutation_class import MutationClass
from models.quiver import CanonicalKey, Quiver
from models.reports import ClassificationReport, ClosureEdge, ClosureResult, PolynomialGroup
from utils.pool import parallel_map

logger = logging.getLogger(__name__)

# (vertex, verdict kind, canonical key of the mutated quiver, permutation text)
ScanEntry = Tuple[int, str, CanonicalKey, Optional[str]]

BAD_EXAMPLE_LIMIT = 10


def member_polynomial(q: Quiver) -> str:
    cartan = path_algebra_controller.build_algebra(q).cartan
    return str(invariants_controller.associated_polynomial(cartan))


def class_document(cls: MutationClass, fixtures_dir: str = FIXTURES_DIR, invariants: bool = False) -> Dict[str, object]:
    """
    JSON-ready dump of a mutation class: members with keys, orbits and catalog
    labels, the mutation edges and the orbit partition. With invariants, each
    member also carries its Cartan matrix and associated polynomial.
    """
    try:
        labels: Dict[int, str] = {}
        if cls.dynkin_type in SUPPORTED_FIXTURE_TYPES:
            catalog = catalog_controller.load_catalog(cls.dynkin_type, fixtures_dir)
            labels = catalog_controller.match_members(cls, catalog)
        orbit_index = mutation_class_controller.orbit_index(cls)

        members = []
        for member, q in enumerate(cls.members):
            entry = {
                "id": member,
                "quiver": q.to_text(),
                "key": cls.keys[member],
                "orbit": orbit_index[member],
                "label": labels.get(member),
            }
            if invariants:
                entry["cartan"] = path_algebra_controller.build_algebra(q).cartan
                entry["polynomial"] = member_polynomial(q)
            members.append(entry)

        return {
            "type": cls.dynkin_type,
            "size": len(cls),
            "members": members,
            "edges": cls.edges,
            "orbits": cls.orbits,
        }
    except Exception as e:
        logger.error(f"Error in class_document: {str(e)}")
        raise


def _scan_member(q: Quiver) -> List[ScanEntry]:
    entries = []
    for verdict in tilting_controller.scan_vertices(q):
        entries.append((
            verdict.vertex,
            verdict.kind.value,
            quiver_controller.canonical_key(verdict.mutated),
            verdict.permutation.to_cycle_text() if verdict.permutation else None,
        ))
    return entries


def partition_by_polynomial(cls: MutationClass, workers: int = 1) -> List[PolynomialGroup]:
    """Members grouped by associated polynomial, ordered by smallest member id."""
    try:
        polynomials = parallel_map(member_polynomial, cls.members, workers)
        orbit_index = mutation_class_controller.orbit_index(cls)
        grouped: Dict[str, List[int]] = {}
        for member, polynomial in enumerate(polynomials):
            grouped.setdefault(polynomial, []).append(member)

        groups = []
        for polynomial, members in sorted(grouped.items(), key=lambda item: item[1][0]):
            orbits = sorted({orbit_index[m] for m in members})
            groups.append(PolynomialGroup(
                polynomial=polynomial,
                count=len(members),
                members=members,
                orbits=orbits,
                orbit_sizes=[len(cls.orbits[o].members) for o in orbits],
            ))
        logger.info(f"{cls.dynkin_type or 'class'}: {len(groups)} polynomial groups over {len(cls)} quivers")
        return groups
    except Exception as e:
        logger.error(f"Error in partition_by_polynomial: {str(e)}")
        raise


def good_mutation_closure(cls: MutationClass, workers: int = 1) -> ClosureResult:
    """
    Components of the relation generated by good mutations, sink/source
    reflections and passing to the opposite algebra.
    """
    try:
        scans = parallel_map(_scan_member, cls.members, workers)
        union_find = UnionFind(range(len(cls)))
        edges: List[ClosureEdge] = []
        counts: Dict[str, int] = {}
        bad = []

        for source, entries in enumerate(scans):
            for vertex, kind, key, permutation in entries:
                counts[kind] = counts.get(kind, 0) + 1
                target = cls.member_id(key)
                if kind == "good":
                    union_find.union(source, target)
                    edges.append(ClosureEdge(
                        source=source, target=target, kind="good", vertex=vertex, permutation=permutation
                    ))
                elif len(bad) < BAD_EXAMPLE_LIMIT:
                    bad.append({"member": source, "vertex": vertex, "kind": kind})

        for orbit in cls.orbits:
            for member in orbit.members:
                if member != orbit.representative:
                    union_find.union(orbit.representative, member)
                    edges.append(ClosureEdge(source=orbit.representative, target=member, kind="sink_source"))

        # A ~ B gives A^op ~ B^op; a member is never joined to its own opposite directly
        opposite_of = {
            member: cls.member_id(quiver_controller.canonical_key(quiver_controller.opposite(q)))
            for member, q in enumerate(cls.members)
        }
        witnessed = [(edge.source, edge.target) for edge in edges]
        for source, target in witnessed:
            image = (opposite_of[source], opposite_of[target])
            if None in image or image[0] == image[1] or image == (source, target):
                continue
            union_find.union(*image)
            edges.append(ClosureEdge(source=image[0], target=image[1], kind="opposite"))

        components = sorted(sorted(block) for block in union_find.to_sets())
        edges.sort(key=lambda e: (e.source, e.target, e.kind, e.vertex or 0))
        logger.info(
            f"Closure: {len(components)} components, verdicts {counts}"
        )
        return ClosureResult(
            components=components,
            edges=edges,
            scanned=sum(len(entries) for entries in scans),
            verdict_counts=counts,
            bad_mutations=bad,
        )
    except Exception as e:
        logger.error(f"Error in good_mutation_closure: {str(e)}")
        raise


def verify_theorem(
    cls: MutationClass,
    groups: List[PolynomialGroup],
    closure: ClosureResult,
) -> ClassificationReport:
    """PASS iff the closure components are exactly the polynomial groups."""
    component_of = {
        member: position
        for position, component in enumerate(closure.components)
        for member in component
    }
    polynomial_of = {member: group.polynomial for group in groups for member in group.members}

    split = []
    for group in groups:
        group.components = len({component_of[m] for m in group.members})
        if group.components > 1:
            split.append(group.polynomial)
    mixed = [
        component for component in closure.components
        if len({polynomial_of[m] for m in component}) > 1
    ]
    crossing = [
        edge for edge in closure.edges
        if edge.kind == "good" and polynomial_of[edge.source] != polynomial_of[edge.target]
    ]
    passed = not split and not mixed and not crossing
    if split:
        logger.warning(f"Polynomial groups split by the closure: {split}")
    if crossing:
        logger.warning(f"{len(crossing)} good mutations join different polynomials")

    return ClassificationReport(
        dynkin_type=cls.dynkin_type or "custom",
        class_size=len(cls),
        orbit_count=len(cls.orbits),
        groups=groups,
        closure=closure,
        split_groups=split,
        mixed_components=mixed,
        crossing_edges=crossing,
        passed=passed,
    )


def attach_labels(cls: MutationClass, groups: List[PolynomialGroup], dynkin_type: str) -> List[PolynomialGroup]:
    """Label rosters per group, with groups put in published order."""
    catalog = catalog_controller.load_catalog(dynkin_type)
    labels = catalog_controller.match_members(cls, catalog)
    for group in groups:
        group.labels = sorted(
            {labels[m] for m in group.members if m in labels},
            key=lambda label: int(label[1:]),
        )
    order = catalog.group_order()
    return sorted(groups, key=lambda group: (order.get(group.polynomial, len(order)), group.members[0]))


def classify(
    dynkin_type: str,
    workers: int = 1,
    cap: int = ENUMERATION_CAP,
    closure: bool = True,
) -> ClassificationReport:
    try:
        name = mutation_class_controller.normalize_type(dynkin_type)
        cls = mutation_class_controller.dynkin_class(name, cap=cap, workers=workers)
        groups = partition_by_polynomial(cls, workers)
        if name in SUPPORTED_FIXTURE_TYPES:
            groups = attach_labels(cls, groups, name)
        if not closure:
            return ClassificationReport(
                dynkin_type=name,
                class_size=len(cls),
                orbit_count=len(cls.orbits),
                groups=groups,
            )
        report = verify_theorem(cls, groups, good_mutation_closure(cls, workers))
        logger.info(report.summary())
        return report
    except Exception as e:
        logger.error(f"Error in classify: {str(e)}")
        raise


@lru_cache(maxsize=8)
def classification(dynkin_type: str, workers: int = 1) -> ClassificationReport:
    """Full classification, cached per process."""
    return classify(dynkin_type, workers=workers)
