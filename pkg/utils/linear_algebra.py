from fractions import Fraction
from typing import List, Sequence

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

Vector = List[Fraction]


def _to_qq(value):
    value = Fraction(value) if isinstance(value, int) else value
    return QQ(int(value.numerator), int(value.denominator))


def _from_qq(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def integer_matrix(rows: Sequence[Sequence[int]]) -> DomainMatrix:
    return DomainMatrix.from_list([[int(e) for e in row] for row in rows], ZZ)


def rational_matrix(rows: Sequence[Sequence], ncols: int) -> DomainMatrix:
    """DomainMatrix over QQ; ncols fixes the shape when rows is empty."""
    if not rows:
        return DomainMatrix.zeros((0, ncols), QQ)
    return DomainMatrix([[_to_qq(e) for e in row] for row in rows], (len(rows), ncols), QQ)


def to_fractions(matrix: DomainMatrix) -> List[Vector]:
    return [[_from_qq(e) for e in row] for row in matrix.convert_to(QQ).to_list()]


def rank(rows: Sequence[Sequence], ncols: int) -> int:
    if not rows or ncols == 0:
        return 0
    return rational_matrix(rows, ncols).rank()


def nullspace(rows: Sequence[Sequence], ncols: int) -> List[Vector]:
    """Basis of {v : rows . v = 0}."""
    if ncols == 0:
        return []
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    reduced, pivots = rational_matrix(rows, ncols).rref()
    if len(pivots) == ncols:
        return []
    return to_fractions(reduced.nullspace_from_rref(pivots))


def independent_columns(columns: Sequence[Vector], dim: int) -> List[int]:
    """Indices of the leftmost maximal independent subset of columns."""
    if not columns or dim == 0:
        return []
    rows = [[column[r] for column in columns] for r in range(dim)]
    _, pivots = rational_matrix(rows, len(columns)).rref()
    return list(pivots)


class CoordinateMap:
    """
    Coordinates with respect to independent columns.

    Maps a vector in the column span to its unique coefficient list, using the
    inverse of a square submatrix on independent rows.
    """

    def __init__(self, columns: Sequence[Vector], dim: int):
        self.size = len(columns)
        self.rows: List[int] = []
        self.inverse: List[Vector] = []
        if not self.size:
            return
        matrix_rows = [[columns[c][r] for c in range(self.size)] for r in range(dim)]
        self.rows = independent_columns(matrix_rows, self.size)
        if len(self.rows) != self.size:
            raise ValueError("columns are not independent")
        square = [[columns[c][r] for c in range(self.size)] for r in self.rows]
        self.inverse = to_fractions(rational_matrix(square, self.size).inv())

    def __call__(self, vector: Sequence) -> Vector:
        picked = [vector[r] for r in self.rows]
        return [sum(entry * value for entry, value in zip(row, picked)) for row in self.inverse]
