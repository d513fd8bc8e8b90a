from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict

from models.catalog import TableRow
from models.quiver import Quiver


class PolynomialGroup(BaseModel):
    polynomial: str
    count: int
    members: List[int]
    orbits: List[int]
    orbit_sizes: List[int]
    labels: List[str] = []
    components: int = 0

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "polynomial": "2(x^6-2x^4+4x^3-2x^2+1)",
                "count": 3,
                "members": [12, 30, 41],
                "orbits": [7],
                "orbit_sizes": [3],
                "labels": ["A11"],
                "components": 1,
            }
        }
    )


class ClosureEdge(BaseModel):
    source: int
    target: int
    kind: Literal["good", "sink_source", "opposite"]
    vertex: Optional[int] = None
    permutation: Optional[str] = None


class ClosureResult(BaseModel):
    components: List[List[int]]
    edges: List[ClosureEdge]
    scanned: int
    verdict_counts: Dict[str, int]
    bad_mutations: List[Dict[str, object]] = []


class ClassificationReport(BaseModel):
    dynkin_type: str
    class_size: int
    orbit_count: int
    groups: List[PolynomialGroup]
    closure: Optional[ClosureResult] = None
    split_groups: List[str] = []
    mixed_components: List[List[int]] = []
    crossing_edges: List[ClosureEdge] = []
    passed: Optional[bool] = None

    def summary(self) -> str:
        verdict = "n/a" if self.passed is None else ("PASS" if self.passed else "FAIL")
        components = len(self.closure.components) if self.closure else "-"
        return (
            f"{self.dynkin_type}: {self.class_size} quivers, {self.orbit_count} sink/source orbits, "
            f"{len(self.groups)} polynomial groups, {components} closure components, theorem {verdict}"
        )


class RowVerdict(BaseModel):
    row: TableRow
    status: Literal["good", "failed", "unresolved"]
    candidate: Optional[Quiver] = None
    adjusted: bool = False
    direction: Optional[Literal["forward", "inverse"]] = None
    permutation_matched: bool = False
    message: Optional[str] = None

    def to_json_dict(self) -> Dict[str, object]:
        return {
            "row": self.row.describe(),
            "status": self.status,
            "candidate": self.candidate.to_text() if self.candidate else None,
            "adjusted": self.adjusted,
            "direction": self.direction,
            "permutation_matched": self.permutation_matched,
            "message": self.message,
        }


class OppositeVerdict(BaseModel):
    label: str
    partner: str
    relation: str
    holds: bool


class TableReport(BaseModel):
    dynkin_type: str
    rows: List[RowVerdict]
    opposites: List[OppositeVerdict]
    label_polynomials: List[Dict[str, str]] = []

    @property
    def passed(self) -> bool:
        return (
            all(verdict.status != "failed" for verdict in self.rows)
            and all(verdict.holds for verdict in self.opposites)
            and not self.label_polynomials
        )

    def counts(self) -> Dict[str, int]:
        result = {"good": 0, "failed": 0, "unresolved": 0}
        for verdict in self.rows:
            result[verdict.status] += 1
        return result
