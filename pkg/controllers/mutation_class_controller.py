import logging
import re
from functools import lru_cache, partial
from typing import Dict, List, Optional, Tuple

import networkx as nx
from networkx.utils import UnionFind

from config import ENUMERATION_CAP
from controllers import quiver_controller
from errors import CapExceeded, InvariantViolation, UnsupportedInput
from models.mutation_class import MutationClass, MutationEdge, Orbit
from models.quiver import CanonicalKey, Quiver
from utils.pool import parallel_map

logger = logging.getLogger(__name__)

_TYPE_RE = re.compile(r'^\s*([ADE])_?\{?(\d+)\}?\s*$', re.IGNORECASE)


def parse_dynkin_type(tag: str) -> Tuple[str, int]:
    match = _TYPE_RE.match(tag or "")
    if not match:
        raise UnsupportedInput(f"Unsupported Dynkin type: {tag!r}")
    family, rank = match.group(1).upper(), int(match.group(2))
    valid = (
        (family == "A" and rank >= 1)
        or (family == "D" and rank >= 4)
        or (family == "E" and 6 <= rank <= 8)
    )
    if not valid:
        raise UnsupportedInput(f"Unsupported Dynkin type: {tag!r}")
    return family, rank


def normalize_type(tag: str) -> str:
    family, rank = parse_dynkin_type(tag)
    return f"{family}{rank}"


def dynkin_seed(tag: str) -> Quiver:
    """
    Fixed orientation of the Dynkin diagram.

    A_n: 1 -> 2 -> ... -> n. D_n: 1 -> ... -> n-1 plus n-2 -> n.
    E_n: 1 -> ... -> n-1 plus 3 -> n.
    """
    family, rank = parse_dynkin_type(tag)
    chain = rank if family == "A" else rank - 1
    arrows = [(i, i + 1) for i in range(1, chain)]
    if family == "D":
        arrows.append((rank - 2, rank))
    elif family == "E":
        arrows.append((3, rank))
    return Quiver.from_arrows(arrows, n=rank)


def _expand(q: Quiver, dynkin: bool = True) -> List[Tuple[int, Quiver, CanonicalKey]]:
    result = []
    for k in range(1, q.n + 1):
        mutated = quiver_controller.mutate(q, k, dynkin=dynkin)
        result.append((k, mutated, quiver_controller.canonical_key(mutated)))
    return result


def enumerate_class(
    seed: Quiver,
    cap: int = ENUMERATION_CAP,
    workers: int = 1,
    dynkin_type: Optional[str] = None,
    dynkin: bool = True,
) -> MutationClass:
    """
    Breadth-first closure of seed under all mutations, deduplicated by canonical key.

    Raises:
        CapExceeded: more than cap members (seed not of finite mutation type, or cap too small)
    """
    try:
        seed_key = quiver_controller.canonical_key(seed)
        members: List[Quiver] = [seed]
        keys: List[CanonicalKey] = [seed_key]
        index: Dict[CanonicalKey, int] = {seed_key: 0}
        pending_edges: List[Tuple[int, int, CanonicalKey]] = []
        frontier = [0]
        level = 0

        while frontier:
            expansions = parallel_map(
                partial(_expand, dynkin=dynkin), [members[i] for i in frontier], workers
            )
            discovered: Dict[CanonicalKey, Quiver] = {}
            for member, expansion in zip(frontier, expansions):
                for k, mutated, key in expansion:
                    pending_edges.append((member, k, key))
                    if key not in index and key not in discovered:
                        discovered[key] = mutated

            frontier = []
            for key in sorted(discovered):
                index[key] = len(members)
                members.append(discovered[key])
                keys.append(key)
                frontier.append(index[key])
            level += 1
            logger.info(f"Level {level}: {len(frontier)} new members, {len(members)} total")
            if len(members) > cap:
                raise CapExceeded(
                    f"Mutation class exceeds the cap of {cap} members",
                    {"members": len(members), "cap": cap},
                )

        edges = [MutationEdge(source=s, vertex=k, target=index[key]) for s, k, key in pending_edges]
        cls = MutationClass(
            dynkin_type=dynkin_type,
            seed=seed,
            members=members,
            keys=keys,
            edges=edges,
        )
        cls.orbits = sink_source_orbits(cls)
        return cls
    except (CapExceeded, InvariantViolation):
        raise
    except Exception as e:
        logger.error(f"Error in enumerate_class: {str(e)}")
        raise


def sink_source_orbits(cls: MutationClass) -> List[Orbit]:
    """Partition of the members under reflection at sinks and sources."""
    union_find = UnionFind(range(len(cls.members)))
    for member_id, q in enumerate(cls.members):
        for k in quiver_controller.sinks_and_sources(q):
            reflected = quiver_controller.reflect(q, k)
            target = cls.member_id(quiver_controller.canonical_key(reflected))
            if target is None:
                raise InvariantViolation(
                    f"Reflection of member {member_id} at {k} leaves the class",
                    {"quiver": q.to_text()},
                )
            union_find.union(member_id, target)

    blocks = sorted(sorted(block) for block in union_find.to_sets())
    orbits = []
    for orbit_id, block in enumerate(blocks):
        representative = min(block, key=lambda member: cls.keys[member])
        orbits.append(Orbit(id=orbit_id, representative=representative, members=block))
    return orbits


def orbit_index(cls: MutationClass) -> Dict[int, int]:
    return {member: orbit.id for orbit in cls.orbits for member in orbit.members}


def is_connected(cls: MutationClass) -> bool:
    graph = nx.Graph()
    graph.add_nodes_from(range(len(cls.members)))
    graph.add_edges_from((edge.source, edge.target) for edge in cls.edges)
    return nx.is_connected(graph)


@lru_cache(maxsize=16)
def dynkin_class(tag: str, cap: int = ENUMERATION_CAP, workers: int = 1) -> MutationClass:
    """Enumerated class of a Dynkin type, cached per process."""
    name = normalize_type(tag)
    return enumerate_class(dynkin_seed(name), cap=cap, workers=workers, dynkin_type=name)
