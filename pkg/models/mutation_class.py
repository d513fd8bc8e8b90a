from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, PrivateAttr

from models.quiver import CanonicalKey, Quiver


class MutationEdge(BaseModel):
    source: int
    vertex: int
    target: int

    model_config = ConfigDict(frozen=True)


class Orbit(BaseModel):
    """Sink/source-equivalence class of member ids."""

    id: int
    representative: int
    members: List[int]


class MutationClass(BaseModel):
    """
    Mutation class of a seed quiver up to isomorphism.

    Member ids are 0-based positions in breadth-first discovery order; within one
    breadth-first level new members are ordered by canonical key.
    """

    dynkin_type: Optional[str] = None
    seed: Quiver
    members: List[Quiver]
    keys: List[CanonicalKey]
    edges: List[MutationEdge]
    orbits: List[Orbit] = []

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "dynkin_type": "A3",
                "members": ["(1,2), (2,3)", "(1,2), (2,3), (3,1)"],
                "edges": [{"source": 0, "vertex": 2, "target": 1}],
            }
        }
    )

    _index: Dict[CanonicalKey, int] = PrivateAttr(default_factory=dict)

    def model_post_init(self, __context) -> None:
        self._index = {key: position for position, key in enumerate(self.keys)}

    def __len__(self) -> int:
        return len(self.members)

    def member_id(self, key: CanonicalKey) -> Optional[int]:
        return self._index.get(key)

    def orbit_of(self, member: int) -> Optional[Orbit]:
        for orbit in self.orbits:
            if member in orbit.members:
                return orbit
        return None

    @property
    def n(self) -> int:
        return self.seed.n
