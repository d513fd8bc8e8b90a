import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from pydantic import ValidationError

from controllers import invariants_controller, path_algebra_controller, quiver_controller
from errors import InvariantViolation, UnsupportedInput
from models.complexes import (
    GoodMutationVerdict,
    HomCohomology,
    TiltingCandidate,
    TiltingReport,
    TwoTermComplex,
    VerdictKind,
)
from models.quiver import Quiver
from models.relations import CartanMatrix, ClusterTiltedAlgebra, PathClassTable
from utils.linear_algebra import (
    CoordinateMap,
    Vector,
    independent_columns,
    integer_matrix,
    nullspace,
    rank,
)

logger = logging.getLogger(__name__)

# (degree p, summand of X^p, summand of Y^(p+m), path class)
HomKey = Tuple[int, int, int, int]

SHIFTS = (-1, 0, 1)


def build_mutation_complex(algebra: ClusterTiltedAlgebra, k: int) -> TiltingCandidate:
    """
    T_k: P_k -> sum of P_j over the arrows j -> k, all other summands stalk P_i in degree 0.

    Raises:
        UnsupportedInput: k out of range or a source
    """
    q = algebra.quiver
    if not 1 <= k <= q.n:
        raise UnsupportedInput(f"Vertex {k} out of range 1..{q.n}")
    heads = q.in_neighbors(k)
    if not heads:
        raise UnsupportedInput(f"Vertex {k} is a source; no complex is built there")

    differential = []
    for j in heads:
        arrow = algebra.table.class_of((j, k))
        if arrow is None:
            raise InvariantViolation(f"Arrow ({j},{k}) is zero in the algebra")
        differential.append((arrow,))

    summands = []
    k0_matrix = []
    for i in range(1, q.n + 1):
        row = [0] * q.n
        if i == k:
            summands.append(
                TwoTermComplex(index=i, lower=(k,), upper=tuple(heads), differential=tuple(differential))
            )
            row[k - 1] -= 1
            for j in heads:
                row[j - 1] += 1
        else:
            summands.append(TwoTermComplex(index=i, upper=(i,)))
            row[i - 1] = 1
        k0_matrix.append(row)
    return TiltingCandidate(algebra=algebra, vertex=k, summands=summands, k0_matrix=k0_matrix)


def _hom_basis(table: PathClassTable, x: TwoTermComplex, y: TwoTermComplex, m: int) -> List[HomKey]:
    """Basis of Hom^m(X, Y) = sum over p of Hom(X^p, Y^(p+m))."""
    basis = []
    for p in (-1, 0):
        for s, a in enumerate(x.term(p)):
            for t, b in enumerate(y.term(p + m)):
                for c in path_algebra_controller.hom_space(table, a, b):
                    basis.append((p, s, t, c))
    return basis


def _differential_rows(
    table: PathClassTable, x: TwoTermComplex, y: TwoTermComplex, m: int
) -> Tuple[List[List[int]], int]:
    """Matrix of D(f) = d_Y f - (-1)^m f d_X from Hom^m to Hom^(m+1), with its column count."""
    source = _hom_basis(table, x, y, m)
    target = _hom_basis(table, x, y, m + 1)
    index = {key: position for position, key in enumerate(target)}
    rows = [[0] * len(source) for _ in target]
    sign = 1 if m % 2 else -1

    for column, (p, s, t, c) in enumerate(source):
        if p + m == -1:
            for u, components in enumerate(y.differential):
                composed = path_algebra_controller.compose(table, components[t], c)
                if composed is not None:
                    rows[index[(p, s, u, composed)]][column] += 1
        if p == 0:
            for r in range(len(x.lower)):
                composed = path_algebra_controller.compose(table, c, x.differential[s][r])
                if composed is not None:
                    rows[index[(-1, r, t, composed)]][column] += sign
    return rows, len(source)


def hom_cohomology(table: PathClassTable, x: TwoTermComplex, y: TwoTermComplex) -> HomCohomology:
    """dim H^m of the total Hom complex for m = -1, 0, 1."""
    hom_dimensions = {}
    ranks = {}
    for m in (-2,) + SHIFTS:
        rows, columns = _differential_rows(table, x, y, m)
        hom_dimensions[m] = columns
        ranks[m] = rank(rows, columns)
    dimensions = {
        m: hom_dimensions[m] - ranks[m] - ranks[m - 1]
        for m in SHIFTS
    }
    return HomCohomology(
        source=x.index,
        target=y.index,
        dimensions=dimensions,
        hom_dimensions={m: hom_dimensions[m] for m in SHIFTS},
    )


def is_tilting(candidate: TiltingCandidate) -> TiltingReport:
    """
    Vanishing of Hom(T_i, T_j[1]) and Hom(T_i, T_j[-1]) over all ordered pairs.

    Pairs of stalk summands have no shifted maps, so only pairs with T_k are computed.
    """
    k = candidate.vertex
    table = candidate.algebra.table
    cohomology = []
    failing = []
    for i in range(1, candidate.n + 1):
        for j in range(1, candidate.n + 1):
            if k not in (i, j):
                continue
            result = hom_cohomology(table, candidate.summand(i), candidate.summand(j))
            cohomology.append(result)
            for shift in (-1, 1):
                if result.dimensions[shift]:
                    failing.append((i, j, shift))
    return TiltingReport(vertex=k, tilting=not failing, failing=failing, cohomology=cohomology)


def happel_check(candidate: TiltingCandidate) -> List[Tuple[int, int, int, int]]:
    """
    Pairs whose Euler characteristic differs from the termwise alternating sum.

    Returns (i, j, euler characteristic, alternating sum) for each mismatch.
    """
    table = candidate.algebra.table
    mismatches = []
    for x in candidate.summands:
        for y in candidate.summands:
            euler = hom_cohomology(table, x, y).euler_characteristic()
            alternating = sum(
                (-1) ** (r - s) * len(path_algebra_controller.hom_space(table, a, b))
                for r in (-1, 0)
                for s in (-1, 0)
                for a in x.term(r)
                for b in y.term(s)
            )
            if euler != alternating:
                mismatches.append((x.index, y.index, euler, alternating))
    return mismatches


def endomorphism_cartan(candidate: TiltingCandidate, report: Optional[TiltingReport] = None) -> CartanMatrix:
    """
    P C_A P^T.

    With a tilting report the result is checked against dim Hom(T_j, T_i) entrywise.
    """
    p = integer_matrix(candidate.k0_matrix)
    c = integer_matrix(candidate.algebra.cartan)
    result = [[int(e) for e in row] for row in p.matmul(c).matmul(p.transpose()).to_list()]
    if report is not None and report.tilting:
        for (i, j), dimension in report.hom_zero().items():
            if result[j - 1][i - 1] != dimension:
                raise InvariantViolation(
                    f"dim Hom(T_{i}, T_{j}) = {dimension} disagrees with the K0 Cartan entry",
                    {"cartan": result},
                )
    return result


class _ChainMaps:
    """H^0 of Hom(X, Y): cycle representatives and coordinates modulo boundaries."""

    def __init__(self, table: PathClassTable, x: TwoTermComplex, y: TwoTermComplex):
        self.basis = _hom_basis(table, x, y, 0)
        self.index = {key: position for position, key in enumerate(self.basis)}
        size = len(self.basis)

        cycle_rows, _ = _differential_rows(table, x, y, 0)
        cycles = nullspace(cycle_rows, size)
        boundary_rows, boundary_count = _differential_rows(table, x, y, -1)
        boundary_columns = [
            [Fraction(row[column]) for row in boundary_rows] for column in range(boundary_count)
        ]
        boundaries = [boundary_columns[c] for c in independent_columns(boundary_columns, size)]
        pivots = independent_columns(boundaries + cycles, size)
        self.representatives: List[Vector] = [
            cycles[p - len(boundaries)] for p in pivots if p >= len(boundaries)
        ]
        self._offset = len(boundaries)
        self._coordinates = CoordinateMap(boundaries + self.representatives, size)

    @property
    def dimension(self) -> int:
        return len(self.representatives)

    def coordinates(self, vector: Sequence[Fraction]) -> Vector:
        return self._coordinates(vector)[self._offset:]

    def combine(self, coefficients: Sequence[Fraction]) -> Vector:
        result = [Fraction(0)] * len(self.basis)
        for coefficient, representative in zip(coefficients, self.representatives):
            if coefficient:
                for position, value in enumerate(representative):
                    result[position] += coefficient * value
        return result


def _compose_chain_maps(
    table: PathClassTable,
    g: Vector,
    g_space: _ChainMaps,
    f: Vector,
    f_space: _ChainMaps,
    target: _ChainMaps,
) -> Vector:
    """g after f, degreewise."""
    g_terms: Dict[Tuple[int, int], List[Tuple[int, int, Fraction]]] = {}
    for (p, t, u, c), value in zip(g_space.basis, g):
        if value:
            g_terms.setdefault((p, t), []).append((u, c, value))

    result = [Fraction(0)] * len(target.basis)
    for (p, s, t, c), value in zip(f_space.basis, f):
        if not value:
            continue
        for u, c_g, value_g in g_terms.get((p, t), []):
            composed = path_algebra_controller.compose(table, c_g, c)
            if composed is not None:
                result[target.index[(p, s, u, composed)]] += value * value_g
    return result


def _radical(table: PathClassTable, space: _ChainMaps) -> List[Vector]:
    """Non-invertible endomorphisms: the kernel of x -> trace(left multiplication by x)."""
    size = space.dimension
    traces = []
    for a in range(size):
        trace = Fraction(0)
        for b in range(size):
            product = _compose_chain_maps(
                table, space.representatives[a], space, space.representatives[b], space, space
            )
            trace += space.coordinates(product)[b]
        traces.append(trace)
    return [space.combine(coefficients) for coefficients in nullspace([traces], size)]


def endomorphism_quiver(candidate: TiltingCandidate) -> Quiver:
    """
    Gabriel quiver of End(T): arrows i -> j count irreducible maps T_j -> T_i.

    Irreducible maps are rad / rad^2 of the homotopy category of the summands.

    Raises:
        InvariantViolation: a loop or 2-cycle appears
    """
    table = candidate.algebra.table
    n = candidate.n
    spaces = {
        (i, j): _ChainMaps(table, candidate.summand(i), candidate.summand(j))
        for i in range(1, n + 1)
        for j in range(1, n + 1)
    }
    radical = {}
    for (i, j), space in spaces.items():
        radical[(i, j)] = _radical(table, space) if i == j else list(space.representatives)

    irreducible = [[0] * n for _ in range(n)]
    for (i, j), space in spaces.items():
        if not radical[(i, j)]:
            continue
        products = []
        for middle in range(1, n + 1):
            for f in radical[(i, middle)]:
                for g in radical[(middle, j)]:
                    composed = _compose_chain_maps(
                        table, g, spaces[(middle, j)], f, spaces[(i, middle)], space
                    )
                    products.append(space.coordinates(composed))
        square = rank(products, space.dimension)
        irreducible[i - 1][j - 1] = len(radical[(i, j)]) - square

    matrix = [[irreducible[b][a] for b in range(n)] for a in range(n)]
    try:
        return Quiver(n=n, a=tuple(tuple(row) for row in matrix))
    except ValidationError as e:
        raise InvariantViolation(
            f"Endomorphism quiver is not loop- and 2-cycle-free: {str(e.errors()[0]['msg'])}",
            {"irreducible": irreducible},
        )


def is_good_mutation(source: Union[Quiver, ClusterTiltedAlgebra], k: int) -> GoodMutationVerdict:
    """
    Certify the mutation at k: T is tilting and End(T) matches the cluster-tilted
    algebra of mu_k(Q) in both quiver and Cartan matrix under one relabeling.

    The permutation sigma sends the vertices of mu_k(Q) to the summand indices.
    """
    try:
        if isinstance(source, ClusterTiltedAlgebra):
            algebra = source
        else:
            algebra = path_algebra_controller.build_algebra(source)
        q = algebra.quiver
        candidate = build_mutation_complex(algebra, k)
        mutated = quiver_controller.mutate(q, k, dynkin=True)
        shorthand = candidate.summand(k).shorthand()

        report = is_tilting(candidate)
        if not report.tilting:
            return GoodMutationVerdict(
                kind=VerdictKind.NOT_TILTING,
                vertex=k,
                mutated=mutated,
                shorthand=shorthand,
                failing=report.failing,
            )

        cartan = endomorphism_cartan(candidate, report)
        target = path_algebra_controller.build_algebra(mutated).cartan
        matches = list(invariants_controller.cartan_permutation_matches(target, cartan))
        if not matches:
            return GoodMutationVerdict(
                kind=VerdictKind.TILTING_BUT_NOT_CLUSTER_TILTED,
                vertex=k,
                mutated=mutated,
                shorthand=shorthand,
                endomorphism_cartan=cartan,
                reason="endomorphism Cartan matrix differs from the mutated algebra's",
            )

        try:
            quiver = endomorphism_quiver(candidate)
        except InvariantViolation as e:
            logger.warning(f"Vertex {k} of {q.to_text()}: {e.message}")
            return GoodMutationVerdict(
                kind=VerdictKind.TILTING_BUT_NOT_CLUSTER_TILTED,
                vertex=k,
                mutated=mutated,
                shorthand=shorthand,
                endomorphism_cartan=cartan,
                reason=e.message,
            )

        isomorphisms = set(quiver_controller.isomorphisms(mutated, quiver))
        for sigma in matches:
            if sigma in isomorphisms:
                return GoodMutationVerdict(
                    kind=VerdictKind.GOOD,
                    vertex=k,
                    mutated=mutated,
                    shorthand=shorthand,
                    permutation=sigma,
                    endomorphism_cartan=cartan,
                    endomorphism_quiver=quiver,
                )
        return GoodMutationVerdict(
            kind=VerdictKind.TILTING_BUT_NOT_CLUSTER_TILTED,
            vertex=k,
            mutated=mutated,
            shorthand=shorthand,
            endomorphism_cartan=cartan,
            endomorphism_quiver=quiver,
            reason="endomorphism quiver does not match the mutated quiver under a Cartan-compatible relabeling",
        )
    except (InvariantViolation, UnsupportedInput):
        raise
    except Exception as e:
        logger.error(f"Error in is_good_mutation: {str(e)}")
        raise


def scan_vertices(q: Quiver) -> List[GoodMutationVerdict]:
    """Verdicts at every vertex with an incoming arrow."""
    algebra = path_algebra_controller.build_algebra(q)
    return [
        is_good_mutation(algebra, k)
        for k in range(1, q.n + 1)
        if not q.is_source(k)
    ]
