from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict

from models.quiver import Quiver


class CatalogGroup(BaseModel):
    polynomial: str
    count: int
    labels: List[str] = []


class PrintedCartan(BaseModel):
    label: str
    polynomial: str
    cartan: List[List[int]]


class OppositeFact(BaseModel):
    """opposite(label) equals partner, or lies in partner's sink/source orbit."""

    label: str
    partner: str
    relation: Literal["equal", "s/s"]


class TableRow(BaseModel):
    """
    One derived-equivalence row: mutating source at vertex, with T_vertex in
    shorthand (vertex; targets), gives target up to permutation.
    """

    source: str
    source_op: bool = False
    star: bool = False
    vertex: int
    targets: List[int]
    target: str
    target_op: bool = False
    permutation: Optional[str] = None
    polynomial: str
    op_pair: Optional[List[str]] = None

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "source": "A5",
                "vertex": 4,
                "targets": [3, 6],
                "target": "A3",
                "permutation": "(457)",
                "polynomial": "2(x^7-x^5+x^4-x^3+x^2-1)",
            }
        }
    )

    def describe(self) -> str:
        source = self.source + ("^op" if self.source_op else "")
        target = self.target + ("^op" if self.target_op else "")
        targets = ",".join(str(t) for t in self.targets)
        star = " (*)" if self.star else ""
        permutation = f" {self.permutation}" if self.permutation else ""
        return f"{source} ({self.vertex};{targets}) ~ {target}{permutation}{star}"


class Catalog(BaseModel):
    """
    Published data for one Dynkin type.

    quivers maps each label to its labelled quivers; the first entry is the one
    used for lookups, further entries are equally valid readings (ties found
    while resolving printed Cartan matrices).
    """

    type: str
    groups: List[CatalogGroup]
    quivers: Dict[str, List[Quiver]]
    cartans: List[PrintedCartan] = []
    opposites: List[OppositeFact] = []
    mutations: List[TableRow] = []

    def labels(self) -> List[str]:
        return sorted(self.quivers, key=lambda label: int(label[1:]))

    def has_label(self, label: str) -> bool:
        return label in self.quivers

    def quiver(self, label: str) -> Quiver:
        return self.quivers[label][0]

    def alternatives(self, label: str) -> List[Quiver]:
        return self.quivers.get(label, [])

    def polynomial_of(self, label: str) -> Optional[str]:
        for group in self.groups:
            if label in group.labels:
                return group.polynomial
        for printed in self.cartans:
            if printed.label == label:
                return printed.polynomial
        return None

    def group_order(self) -> Dict[str, int]:
        return {group.polynomial: position for position, group in enumerate(self.groups)}
