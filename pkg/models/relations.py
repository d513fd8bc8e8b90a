from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from models.quiver import Quiver, VertexPermutation

# Vertex sequence in travel order: (3, 4, 2) is the path 3 -> 4 -> 2.
Path = Tuple[int, ...]

CartanMatrix = List[List[int]]


def path_text(path: Path) -> str:
    return "->".join(str(v) for v in path)


class ZeroRelation(BaseModel):
    arrow: Tuple[int, int]
    path: Path

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={"example": {"arrow": [2, 1], "path": [1, 3, 2]}}
    )


class CommutativityRelation(BaseModel):
    """Two parallel paths declared equal; stored in sorted order."""

    arrow: Tuple[int, int]
    paths: Tuple[Path, Path]

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={"example": {"arrow": [2, 3], "paths": [[3, 4, 2], [3, 6, 2]]}}
    )


class RelationSet(BaseModel):
    zeros: List[ZeroRelation] = []
    comms: List[CommutativityRelation] = []

    model_config = ConfigDict(frozen=True)

    def zero_paths(self) -> List[Path]:
        return [relation.path for relation in self.zeros]

    def comm_pairs(self) -> List[Tuple[Path, Path]]:
        return [relation.paths for relation in self.comms]

    def is_empty(self) -> bool:
        return not self.zeros and not self.comms

    def relabel(self, sigma: VertexPermutation) -> "RelationSet":
        def move(path: Path) -> Path:
            return tuple(sigma(v) for v in path)

        zeros = [
            ZeroRelation(arrow=(sigma(z.arrow[0]), sigma(z.arrow[1])), path=move(z.path))
            for z in self.zeros
        ]
        comms = [
            CommutativityRelation(
                arrow=(sigma(c.arrow[0]), sigma(c.arrow[1])),
                paths=tuple(sorted((move(c.paths[0]), move(c.paths[1])))),
            )
            for c in self.comms
        ]
        return RelationSet(
            zeros=sorted(zeros, key=lambda z: z.path),
            comms=sorted(comms, key=lambda c: c.paths),
        )

    def to_lines(self) -> List[str]:
        lines = [f"zero: {path_text(z.path)}" for z in self.zeros]
        lines += [
            f"comm: {path_text(c.paths[0])} = {path_text(c.paths[1])}" for c in self.comms
        ]
        return lines


class PathClassTable(BaseModel):
    """
    Nonzero path classes of KQ/I.

    classes maps every walk that is nonzero in the algebra to its class id;
    walks missing from the map are zero. Class ids are ordered by their
    representative, the lexicographically least vertex sequence in the class.
    """

    n: int
    stabilization_length: int
    classes: Dict[Path, int]
    representatives: List[Path]
    between: Dict[Tuple[int, int], List[int]]

    model_config = ConfigDict(frozen=True)

    def class_of(self, walk: Path) -> Optional[int]:
        return self.classes.get(tuple(walk))

    def classes_between(self, start: int, end: int) -> List[int]:
        """Nonzero classes of paths start ~> end."""
        return self.between.get((start, end), [])

    def start(self, class_id: int) -> int:
        return self.representatives[class_id][0]

    def end(self, class_id: int) -> int:
        return self.representatives[class_id][-1]

    def length(self, class_id: int) -> int:
        return len(self.representatives[class_id]) - 1

    def by_length(self, length: int) -> Dict[Path, int]:
        return {walk: cid for walk, cid in self.classes.items() if len(walk) == length + 1}

    def trivial(self, vertex: int) -> int:
        return self.classes[(vertex,)]


class ClusterTiltedAlgebra(BaseModel):
    """KQ/I for a quiver in a Dynkin mutation class, with its path classes and Cartan matrix."""

    quiver: Quiver
    relations: RelationSet
    table: PathClassTable
    cartan: CartanMatrix

    model_config = ConfigDict(frozen=True)

    @property
    def n(self) -> int:
        return self.quiver.n
