import logging
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence

from errors import InvariantViolation, UnsupportedInput
from models.polynomial import IntPolynomial
from models.quiver import VertexPermutation
from models.relations import CartanMatrix
from utils.linear_algebra import integer_matrix, rational_matrix, to_fractions

logger = logging.getLogger(__name__)

RationalMatrix = List[List[Fraction]]


def _check_square(c: Sequence[Sequence[int]]) -> int:
    size = len(c)
    if any(len(row) != size for row in c):
        raise UnsupportedInput(f"Expected a square matrix, got {size} rows of lengths {[len(r) for r in c]}")
    return size


def determinant(c: CartanMatrix) -> int:
    size = _check_square(c)
    if size == 0:
        return 1
    return int(integer_matrix(c).det())


def euler_form(c: CartanMatrix, x: Sequence[int], y: Sequence[int]) -> int:
    """<x, y> = x^T C^T y; on projectives <e_i, e_j> = c_ji."""
    size = _check_square(c)
    if len(x) != size or len(y) != size:
        raise UnsupportedInput(f"Vectors must have length {size}")
    return sum(x[i] * c[j][i] * y[j] for i in range(size) for j in range(size))


def asymmetry(c: CartanMatrix) -> RationalMatrix:
    """
    S = C C^{-T}, exactly.

    Logs a warning when S is not integral.

    Raises:
        InvariantViolation: singular Cartan matrix
    """
    size = _check_square(c)
    if determinant(c) == 0:
        raise InvariantViolation("Cartan matrix is singular", {"cartan": c})
    matrix = rational_matrix(c, size)
    s = to_fractions(matrix.matmul(matrix.inv().transpose()))
    if any(entry.denominator != 1 for row in s for entry in row):
        logger.warning(f"Asymmetry matrix is not integral for Cartan {c}")
    return s


def is_integral(m: RationalMatrix) -> bool:
    return all(entry.denominator == 1 for row in m for entry in row)


def char_poly(m: RationalMatrix) -> List[Fraction]:
    """det(xI - m), monic, leading coefficient first."""
    size = _check_square(m)
    if size == 0:
        return [Fraction(1)]
    return [Fraction(int(e.numerator), int(e.denominator)) for e in rational_matrix(m, size).charpoly()]


def associated_polynomial(c: CartanMatrix) -> IntPolynomial:
    """
    det(C) times the characteristic polynomial of the asymmetry matrix.

    Raises:
        InvariantViolation: singular Cartan or a non-integral product
    """
    try:
        d = determinant(c)
        coefficients = [d * value for value in char_poly(asymmetry(c))]
        if any(value.denominator != 1 for value in coefficients):
            raise InvariantViolation(
                "Associated polynomial has non-integral coefficients", {"cartan": c}
            )
        return IntPolynomial(coefficients=tuple(int(value) for value in coefficients))
    except InvariantViolation:
        raise
    except Exception as e:
        logger.error(f"Error in associated_polynomial: {str(e)}")
        raise


def permute_matrix(c: CartanMatrix, sigma: VertexPermutation) -> CartanMatrix:
    """P_sigma C P_sigma^T: entry (i, j) moves to (sigma(i), sigma(j))."""
    size = len(c)
    result = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            result[sigma(i + 1) - 1][sigma(j + 1) - 1] = c[i][j]
    return result


def _signature(c: Sequence[Sequence[int]], i: int):
    size = len(c)
    return (
        c[i][i],
        tuple(sorted(c[i][j] for j in range(size) if j != i)),
        tuple(sorted(c[j][i] for j in range(size) if j != i)),
    )


def cartan_permutation_matches(c1: CartanMatrix, c2: CartanMatrix) -> Iterator[VertexPermutation]:
    """
    Every sigma with P_sigma c1 P_sigma^T = c2, in lexicographic order of images.

    Backtracking over vertices, pruned by row/column multisets and the diagonal.
    """
    size = _check_square(c1)
    if _check_square(c2) != size:
        return
    signatures1 = [_signature(c1, i) for i in range(size)]
    signatures2 = [_signature(c2, i) for i in range(size)]
    if sorted(signatures1) != sorted(signatures2):
        return

    image: List[int] = []
    used = [False] * size

    def assign(i: int) -> Iterator[VertexPermutation]:
        if i == size:
            yield VertexPermutation(image=tuple(v + 1 for v in image))
            return
        for target in range(size):
            if used[target] or signatures1[i] != signatures2[target]:
                continue
            consistent = all(
                c1[i][p] == c2[target][image[p]] and c1[p][i] == c2[image[p]][target]
                for p in range(i)
            )
            if not consistent:
                continue
            used[target] = True
            image.append(target)
            yield from assign(i + 1)
            image.pop()
            used[target] = False

    yield from assign(0)


def cartan_permutation_match(c1: CartanMatrix, c2: CartanMatrix) -> Optional[VertexPermutation]:
    return next(cartan_permutation_matches(c1, c2), None)
