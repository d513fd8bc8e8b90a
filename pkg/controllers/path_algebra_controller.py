import logging
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from networkx.utils import UnionFind

from config import PATH_LENGTH_FACTOR
from controllers import relations_controller
from errors import InvariantViolation, UnsupportedInput
from models.quiver import Quiver
from models.relations import (
    CartanMatrix,
    ClusterTiltedAlgebra,
    Path,
    PathClassTable,
    RelationSet,
    path_text,
)

logger = logging.getLogger(__name__)

# union-find sentinel for the zero class; no walk is empty
_ZERO: Path = ()


def _contains(walk: Path, pattern: Path) -> bool:
    size = len(pattern)
    return any(walk[p:p + size] == pattern for p in range(len(walk) - size + 1))


def _has_zero_suffix(walk: Path, zeros: Sequence[Path]) -> bool:
    return any(len(walk) >= len(z) and walk[-len(z):] == z for z in zeros)


def _substitutions(r: RelationSet) -> List[Tuple[Path, Path]]:
    pairs = []
    for left, right in r.comm_pairs():
        pairs.append((left, right))
        pairs.append((right, left))
    return pairs


def _rewrites(walk: Path, substitutions: Sequence[Tuple[Path, Path]]) -> List[Path]:
    """Every walk reached from walk by one substitution."""
    result = []
    for old, new in substitutions:
        size = len(old)
        for p in range(len(walk) - size + 1):
            if walk[p:p + size] == old:
                result.append(walk[:p] + new + walk[p + size:])
    return result


def path_classes(q: Quiver, r: RelationSet) -> PathClassTable:
    """
    Path classes of KQ/I, built one length at a time.

    A walk of length l + 1 is only formed from a walk of length l whose class
    is nonzero. Substituting one side of a commutativity pair for the other
    joins two walks; a result that was never formed, or that holds a
    zero-relation subpath, is zero. The two sides may differ in length, so a
    substitution into a longer walk waits until that length is built.
    The stabilization length is the first length at which every class is zero.

    Raises:
        InvariantViolation: nonzero classes survive past the length cap
    """
    if q.max_multiplicity() > 1:
        raise UnsupportedInput("Path classes need a quiver without multiple arrows")
    zeros = r.zero_paths()
    substitutions = _substitutions(r)
    cap = PATH_LENGTH_FACTOR * q.n

    union_find = UnionFind([_ZERO])
    known = set()
    pending: Dict[int, List[Tuple[Path, Path]]] = {}

    def is_zero(walk: Path) -> bool:
        return walk not in known or union_find[walk] == union_find[_ZERO]

    level: List[Path] = [(v,) for v in range(1, q.n + 1)]
    length = 0
    while True:
        known.update(level)
        for walk in level:
            union_find[walk]  # register
            if len(walk) > 1 and is_zero(walk[1:]):
                union_find.union(walk, _ZERO)
        for walk in level:
            for replaced in _rewrites(walk, substitutions):
                if any(_contains(replaced, z) for z in zeros):
                    union_find.union(walk, _ZERO)
                elif len(replaced) > len(walk):
                    pending.setdefault(len(replaced) - 1, []).append((walk, replaced))
                elif replaced in known:
                    union_find.union(walk, replaced)
                else:
                    union_find.union(walk, _ZERO)
        for walk, replaced in pending.pop(length, []):
            union_find.union(walk, replaced if replaced in known else _ZERO)

        frontier = [walk for walk in level if not is_zero(walk)]
        if not frontier:
            break
        length += 1
        if length > cap:
            raise InvariantViolation(
                f"Nonzero classes of length {cap} remain; algebra is not finite-dimensional",
                {"quiver": q.to_text(), "cap": cap},
            )
        level = [
            walk + (w,)
            for walk in frontier
            for w in q.out_neighbors(walk[-1])
            if not _has_zero_suffix(walk + (w,), zeros)
        ]

    # substitutions into lengths that were never built reach zero walks
    for pairs in pending.values():
        for walk, _ in pairs:
            union_find.union(walk, _ZERO)

    zero_root = union_find[_ZERO]
    blocks = [
        sorted(block)
        for block in union_find.to_sets()
        if _ZERO not in block
    ]
    blocks.sort(key=lambda block: block[0])

    classes: Dict[Path, int] = {}
    representatives: List[Path] = []
    between: Dict[Tuple[int, int], List[int]] = {}
    for class_id, block in enumerate(blocks):
        representatives.append(block[0])
        ends = {(walk[0], walk[-1]) for walk in block}
        if len(ends) != 1:
            raise InvariantViolation(
                "Path class joins walks with different endpoints", {"quiver": q.to_text()}
            )
        for walk in block:
            classes[walk] = class_id
        between.setdefault(ends.pop(), []).append(class_id)

    stabilization = 1 + max(len(walk) - 1 for walk in classes)
    zero_count = sum(1 for walk in known if union_find[walk] == zero_root)
    logger.debug(
        f"Path classes: {len(blocks)} nonzero, {zero_count} zero walks, "
        f"stabilization length {stabilization}"
    )
    return PathClassTable(
        n=q.n,
        stabilization_length=stabilization,
        classes=classes,
        representatives=representatives,
        between=between,
    )


def class_of_path(table: PathClassTable, walk: Sequence[int]) -> Optional[int]:
    """Class id of a walk, None when it is zero in the algebra."""
    return table.class_of(tuple(walk))


def compose(table: PathClassTable, f: Optional[int], g: Optional[int]) -> Optional[int]:
    """
    Class of the concatenation: first f, then g.

    None stands for the zero class on input and output.
    """
    if f is None or g is None:
        return None
    if table.end(f) != table.start(g):
        raise UnsupportedInput(
            f"Cannot compose a path ending at {table.end(f)} with one starting at {table.start(g)}"
        )
    walk = table.representatives[f] + table.representatives[g][1:]
    return table.class_of(walk)


def hom_space(table: PathClassTable, a: int, b: int) -> List[int]:
    """Basis of Hom(P_a, P_b): the nonzero path classes b ~> a."""
    return table.classes_between(b, a)


def cartan_matrix(q: Quiver, r: Optional[RelationSet] = None) -> CartanMatrix:
    """c_ij = number of nonzero path classes i ~> j = dim Hom(P_j, P_i)."""
    if r is None:
        r = relations_controller.synthesize(q)
    return _cartan_from_table(path_classes(q, r))


def _cartan_from_table(table: PathClassTable) -> CartanMatrix:
    return [
        [len(table.classes_between(i, j)) for j in range(1, table.n + 1)]
        for i in range(1, table.n + 1)
    ]


@lru_cache(maxsize=8192)
def build_algebra(q: Quiver) -> ClusterTiltedAlgebra:
    """Relations, path classes and Cartan matrix of the cluster-tilted algebra of q."""
    try:
        relations = relations_controller.synthesize(q)
        table = path_classes(q, relations)
        return ClusterTiltedAlgebra(
            quiver=q,
            relations=relations,
            table=table,
            cartan=_cartan_from_table(table),
        )
    except (InvariantViolation, UnsupportedInput):
        raise
    except Exception as e:
        logger.error(f"Error in build_algebra: {str(e)}")
        raise
