from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

# Lexicographically minimal serialization of the arrow matrix; see quiver_controller.canonical_key.
CanonicalKey = bytes

ArrowMatrix = Tuple[Tuple[int, ...], ...]


class Quiver(BaseModel):
    """
    Loop-free, 2-cycle-free quiver on the vertices 1..n.

    a[i][j] (0-based storage) is the number of arrows (i+1) -> (j+1).
    """

    n: int = Field(ge=1)
    a: ArrowMatrix

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "example": {"n": 3, "a": [[0, 1, 0], [0, 0, 1], [0, 0, 0]]}
        }
    )

    @model_validator(mode="after")
    def check_arrow_matrix(self):
        if len(self.a) != self.n or any(len(row) != self.n for row in self.a):
            raise ValueError(f"arrow matrix must be {self.n}x{self.n}")
        for i in range(self.n):
            if self.a[i][i] != 0:
                raise ValueError(f"loop at vertex {i + 1}")
            for j in range(self.n):
                if self.a[i][j] < 0:
                    raise ValueError("arrow counts must be nonnegative")
                if j > i and self.a[i][j] and self.a[j][i]:
                    raise ValueError(f"2-cycle between vertices {i + 1} and {j + 1}")
        return self

    @classmethod
    def from_arrows(cls, arrows: Iterable[Sequence[int]], n: Optional[int] = None) -> "Quiver":
        """Build from 1-based (source, target) pairs; repeated pairs add multiplicity."""
        arrows = [tuple(arrow) for arrow in arrows]
        size = n if n is not None else max((max(s, t) for s, t in arrows), default=0)
        matrix = [[0] * size for _ in range(size)]
        for source, target in arrows:
            if not (1 <= source <= size and 1 <= target <= size):
                raise ValueError(f"arrow ({source},{target}) outside vertices 1..{size}")
            matrix[source - 1][target - 1] += 1
        return cls(n=size, a=tuple(tuple(row) for row in matrix))

    @classmethod
    def from_exchange(cls, b: Sequence[Sequence[int]]) -> "Quiver":
        """Normalize a skew-symmetric signed matrix (b_ij < 0 meaning arrows j -> i)."""
        size = len(b)
        matrix = tuple(
            tuple(max(int(b[i][j]), 0) for j in range(size)) for i in range(size)
        )
        return cls(n=size, a=matrix)

    def exchange_matrix(self) -> List[List[int]]:
        return [[self.a[i][j] - self.a[j][i] for j in range(self.n)] for i in range(self.n)]

    def arrows(self) -> List[Tuple[int, int]]:
        """Arrows as 1-based pairs in lexicographic order, repeated by multiplicity."""
        result = []
        for i in range(self.n):
            for j in range(self.n):
                result.extend([(i + 1, j + 1)] * self.a[i][j])
        return result

    def arrow_count(self, source: int, target: int) -> int:
        return self.a[source - 1][target - 1]

    def in_neighbors(self, k: int) -> List[int]:
        return [i + 1 for i in range(self.n) for _ in range(self.a[i][k - 1])]

    def out_neighbors(self, k: int) -> List[int]:
        return [j + 1 for j in range(self.n) for _ in range(self.a[k - 1][j])]

    def is_sink(self, k: int) -> bool:
        return not any(self.a[k - 1])

    def is_source(self, k: int) -> bool:
        return not any(self.a[i][k - 1] for i in range(self.n))

    def max_multiplicity(self) -> int:
        return max((max(row) for row in self.a), default=0)

    def to_text(self) -> str:
        return ", ".join(f"({s},{t})" for s, t in self.arrows())

    def to_json_dict(self) -> Dict[str, object]:
        return {"n": self.n, "arrows": [[s, t] for s, t in self.arrows()]}

    def __str__(self) -> str:
        return self.to_text() or f"(no arrows, n={self.n})"


class VertexPermutation(BaseModel):
    """Bijection on 1..n; image[i - 1] is the image of vertex i."""

    image: Tuple[int, ...]

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def check_bijection(self):
        if sorted(self.image) != list(range(1, len(self.image) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.image)}: {self.image}")
        return self

    @classmethod
    def identity(cls, n: int) -> "VertexPermutation":
        return cls(image=tuple(range(1, n + 1)))

    @classmethod
    def from_mapping(cls, mapping: Dict[int, int], n: int) -> "VertexPermutation":
        return cls(image=tuple(mapping.get(v, v) for v in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, vertex: int) -> int:
        return self.image[vertex - 1]

    def inverse(self) -> "VertexPermutation":
        inverse = [0] * self.n
        for source, target in enumerate(self.image, start=1):
            inverse[target - 1] = source
        return VertexPermutation(image=tuple(inverse))

    def compose(self, other: "VertexPermutation") -> "VertexPermutation":
        """self after other."""
        return VertexPermutation(image=tuple(self(other(v)) for v in range(1, self.n + 1)))

    def is_identity(self) -> bool:
        return self.image == tuple(range(1, self.n + 1))

    def cycles(self) -> List[Tuple[int, ...]]:
        seen = set()
        result = []
        for start in range(1, self.n + 1):
            if start in seen or self(start) == start:
                continue
            cycle = [start]
            seen.add(start)
            current = self(start)
            while current != start:
                cycle.append(current)
                seen.add(current)
                current = self(current)
            result.append(tuple(cycle))
        return result

    def to_cycle_text(self) -> str:
        """Disjoint-cycle notation with fixed points omitted; "(1)" for the identity."""
        cycles = self.cycles()
        if not cycles:
            return "(1)"
        separator = "," if self.n >= 10 else ""
        return "".join("(" + separator.join(str(v) for v in cycle) + ")" for cycle in cycles)

    def __str__(self) -> str:
        return self.to_cycle_text()
