import logging
from typing import List

from errors import InvariantViolation, UnsupportedInput
from models.quiver import Quiver
from models.relations import CommutativityRelation, Path, RelationSet, ZeroRelation, path_text

logger = logging.getLogger(__name__)


def _check_simple(q: Quiver) -> None:
    if q.max_multiplicity() > 1:
        raise UnsupportedInput(
            "Relations are only synthesized for quivers without multiple arrows",
            {"quiver": q.to_text()},
        )


def shortest_paths(q: Quiver, i: int, j: int) -> List[Path]:
    """
    Paths j ~> i that close the arrow i -> j to a full cycle.

    A path qualifies when it repeats no vertex and the subquiver induced on its
    vertices holds exactly the path arrows plus i -> j, each once.
    """
    _check_simple(q)
    if q.arrow_count(i, j) != 1:
        raise UnsupportedInput(f"({i},{j}) is not an arrow of the quiver")

    found: List[Path] = []

    def allowed(walk: List[int], w: int) -> bool:
        # arrows between w and the vertices already on the walk
        last = walk[-1]
        for v in walk:
            forward = q.arrow_count(v, w)
            backward = q.arrow_count(w, v)
            expected_forward = 1 if v == last else 0
            expected_backward = 1 if (w == i and v == j) else 0
            if forward != expected_forward or backward != expected_backward:
                return False
        return True

    def extend(walk: List[int]) -> None:
        for w in q.out_neighbors(walk[-1]):
            if w in walk or not allowed(walk, w):
                continue
            if w == i:
                found.append(tuple(walk + [w]))
            else:
                extend(walk + [w])

    extend([j])
    return sorted(found)


def synthesize(q: Quiver) -> RelationSet:
    """
    Minimal zero and commutativity relations of the cluster-tilted algebra of q.

    An arrow with one shortest path contributes that path as a zero relation,
    two shortest paths are declared equal.

    Raises:
        InvariantViolation: an arrow with three or more shortest paths
    """
    try:
        zeros = []
        comms = []
        for i, j in q.arrows():
            paths = shortest_paths(q, i, j)
            if len(paths) == 1:
                zeros.append(ZeroRelation(arrow=(i, j), path=paths[0]))
            elif len(paths) == 2:
                comms.append(CommutativityRelation(arrow=(i, j), paths=(paths[0], paths[1])))
            elif len(paths) > 2:
                raise InvariantViolation(
                    f"Arrow ({i},{j}) has {len(paths)} shortest paths; input is not of Dynkin type",
                    {"quiver": q.to_text(), "paths": [path_text(p) for p in paths]},
                )
        logger.debug(f"Synthesized {len(zeros)} zero and {len(comms)} commutativity relations")
        return RelationSet(
            zeros=sorted(zeros, key=lambda z: z.path),
            comms=sorted(comms, key=lambda c: c.paths),
        )
    except (InvariantViolation, UnsupportedInput):
        raise
    except Exception as e:
        logger.error(f"Error in synthesize: {str(e)}")
        raise
