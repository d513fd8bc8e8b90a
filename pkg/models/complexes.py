from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from models.quiver import Quiver, VertexPermutation
from models.relations import CartanMatrix, ClusterTiltedAlgebra


class TwoTermComplex(BaseModel):
    """
    Complex of projectives in degrees -1 and 0.

    differential[t][s] is the path class of the component from summand s of
    degree -1 to summand t of degree 0, None for a zero component.
    """

    index: int
    lower: Tuple[int, ...] = ()
    upper: Tuple[int, ...]
    differential: Tuple[Tuple[Optional[int], ...], ...] = ()

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "example": {"index": 2, "lower": [2], "upper": [1, 5], "differential": [[0], [3]]}
        }
    )

    def term(self, degree: int) -> Tuple[int, ...]:
        if degree == -1:
            return self.lower
        if degree == 0:
            return self.upper
        return ()

    def is_stalk(self) -> bool:
        return not self.lower

    def shorthand(self) -> str:
        """(2;1,5) for P_2 -> P_1 + P_5, P3 for a stalk."""
        if self.is_stalk():
            return "+".join(f"P{i}" for i in self.upper)
        lower = ",".join(str(i) for i in self.lower)
        upper = ",".join(str(i) for i in self.upper)
        return f"({lower};{upper})"


class TiltingCandidate(BaseModel):
    """Summands T_1..T_n for the mutation at vertex; k0_matrix rows are their classes."""

    algebra: ClusterTiltedAlgebra
    vertex: int
    summands: List[TwoTermComplex]
    k0_matrix: List[List[int]]

    model_config = ConfigDict(arbitrary_types_allowed=True)

    @property
    def n(self) -> int:
        return len(self.summands)

    def summand(self, i: int) -> TwoTermComplex:
        return self.summands[i - 1]


class HomCohomology(BaseModel):
    source: int
    target: int
    dimensions: Dict[int, int]
    hom_dimensions: Dict[int, int]

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "source": 3,
                "target": 3,
                "dimensions": {-1: 0, 0: 1, 1: 0},
                "hom_dimensions": {-1: 0, 0: 5, 1: 4},
            }
        }
    )

    def euler_characteristic(self) -> int:
        return sum((-1) ** shift * dim for shift, dim in self.dimensions.items())


class TiltingReport(BaseModel):
    vertex: int
    tilting: bool
    failing: List[Tuple[int, int, int]] = []
    cohomology: List[HomCohomology] = []

    def hom_zero(self) -> Dict[Tuple[int, int], int]:
        return {(h.source, h.target): h.dimensions.get(0, 0) for h in self.cohomology}


class VerdictKind(str, Enum):
    GOOD = "good"
    NOT_TILTING = "not_tilting"
    TILTING_BUT_NOT_CLUSTER_TILTED = "tilting_but_not_cluster_tilted"


class GoodMutationVerdict(BaseModel):
    kind: VerdictKind
    vertex: int
    mutated: Quiver
    shorthand: str
    permutation: Optional[VertexPermutation] = None
    failing: List[Tuple[int, int, int]] = []
    endomorphism_cartan: Optional[CartanMatrix] = None
    endomorphism_quiver: Optional[Quiver] = None
    reason: Optional[str] = None

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "kind": "good",
                "vertex": 3,
                "shorthand": "(3;2,5,6)",
                "permutation": "(1)",
            }
        }
    )

    @property
    def is_good(self) -> bool:
        return self.kind == VerdictKind.GOOD

    def to_json_dict(self) -> Dict[str, object]:
        return {
            "kind": self.kind.value,
            "vertex": self.vertex,
            "shorthand": self.shorthand,
            "mutated": self.mutated.to_text(),
            "permutation": self.permutation.to_cycle_text() if self.permutation else None,
            "failing": [list(pair) for pair in self.failing],
            "endomorphism_cartan": self.endomorphism_cartan,
            "endomorphism_quiver": (
                self.endomorphism_quiver.to_text() if self.endomorphism_quiver else None
            ),
            "reason": self.reason,
        }
