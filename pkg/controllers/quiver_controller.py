import itertools
import logging
from functools import lru_cache
from typing import List, Optional, Tuple

import numpy as np

from config import CANONICAL_KEY_MAX_VERTICES
from errors import InvariantViolation, UnsupportedInput
from models.quiver import CanonicalKey, Quiver, VertexPermutation

logger = logging.getLogger(__name__)


def _check_vertex(q: Quiver, k: int) -> None:
    if not isinstance(k, int) or not 1 <= k <= q.n:
        raise UnsupportedInput(f"Vertex {k} out of range 1..{q.n}")


def mutate(q: Quiver, k: int, dynkin: bool = False) -> Quiver:
    """
    Fomin-Zelevinsky mutation at vertex k.

    Composites i -> k -> j are added, opposing arrows cancel, and the arrows at k
    are reversed. With dynkin=True every resulting multiplicity must be 0 or 1.
    """
    _check_vertex(q, k)
    b = np.array(q.exchange_matrix(), dtype=np.int64)
    column = b[:, k - 1:k]
    row = b[k - 1:k, :]
    mutated = b + (np.abs(column) * row + column * np.abs(row)) // 2
    mutated[k - 1, :] = -b[k - 1, :]
    mutated[:, k - 1] = -b[:, k - 1]

    result = Quiver.from_exchange(mutated.tolist())
    if dynkin and result.max_multiplicity() > 1:
        raise InvariantViolation(
            f"Mutation at {k} produced a multiple arrow; input is not of simply-laced finite type",
            {"quiver": q.to_text(), "vertex": k},
        )
    return result


def opposite(q: Quiver) -> Quiver:
    return Quiver(n=q.n, a=tuple(zip(*q.a)))


def reflect(q: Quiver, k: int) -> Quiver:
    """Reverse all arrows at a sink or source k."""
    _check_vertex(q, k)
    if not (q.is_sink(k) or q.is_source(k)):
        raise UnsupportedInput(f"Vertex {k} is neither a sink nor a source")
    # no paths pass through k, so mutation only reverses its arrows
    return mutate(q, k)


def sinks_and_sources(q: Quiver) -> List[int]:
    return [k for k in range(1, q.n + 1) if q.is_sink(k) or q.is_source(k)]


def relabel(q: Quiver, sigma: VertexPermutation) -> Quiver:
    """sigma . q: the arrow i -> j becomes sigma(i) -> sigma(j)."""
    if sigma.n != q.n:
        raise UnsupportedInput(f"Permutation on {sigma.n} vertices cannot relabel a quiver on {q.n}")
    matrix = [[0] * q.n for _ in range(q.n)]
    for i in range(q.n):
        for j in range(q.n):
            matrix[sigma(i + 1) - 1][sigma(j + 1) - 1] = q.a[i][j]
    return Quiver(n=q.n, a=tuple(tuple(row) for row in matrix))


def _refined_colors(q: Quiver) -> List[int]:
    """Iterated degree refinement; colors are labeling-independent integers."""
    n, a = q.n, q.a
    colors = [0] * n
    class_count = 0
    while True:
        signatures = []
        for v in range(n):
            outgoing = sorted(colors[w] for w in range(n) for _ in range(a[v][w]))
            incoming = sorted(colors[u] for u in range(n) for _ in range(a[u][v]))
            signatures.append((colors[v], tuple(outgoing), tuple(incoming)))
        ranking = {signature: rank for rank, signature in enumerate(sorted(set(signatures)))}
        colors = [ranking[signature] for signature in signatures]
        if len(ranking) == class_count:
            return colors
        class_count = len(ranking)


@lru_cache(maxsize=65536)
def canonical_form(q: Quiver) -> Tuple[CanonicalKey, Tuple[Tuple[int, ...], ...]]:
    """
    Minimal serialization over relabelings that respect the refined color classes.

    Returns the key and every optimal vertex order (position -> 0-based vertex);
    the orders differ by automorphisms.
    """
    if q.n > CANONICAL_KEY_MAX_VERTICES:
        raise UnsupportedInput(
            f"Canonical keys support at most {CANONICAL_KEY_MAX_VERTICES} vertices, got {q.n}"
        )
    if q.max_multiplicity() > 255:
        raise UnsupportedInput("Canonical keys support arrow multiplicities up to 255")
    colors = _refined_colors(q)
    cells = [
        [v for v in range(q.n) if colors[v] == color]
        for color in sorted(set(colors))
    ]
    best = None
    orders = []
    for arrangement in itertools.product(*(itertools.permutations(cell) for cell in cells)):
        order = tuple(v for part in arrangement for v in part)
        serialized = bytes(q.a[i][j] for i in order for j in order)
        if best is None or serialized < best:
            best = serialized
            orders = [order]
        elif serialized == best:
            orders.append(order)
    key = bytes([q.n]) + best
    return key, tuple(orders)


def canonical_key(q: Quiver) -> CanonicalKey:
    """Equal for two quivers iff they are isomorphic as directed graphs."""
    return canonical_form(q)[0]


def is_isomorphic(q1: Quiver, q2: Quiver) -> bool:
    return q1.n == q2.n and canonical_key(q1) == canonical_key(q2)


def isomorphisms(q1: Quiver, q2: Quiver) -> List[VertexPermutation]:
    """All sigma with sigma . q1 == q2."""
    if q1.n != q2.n:
        return []
    key1, orders1 = canonical_form(q1)
    key2, orders2 = canonical_form(q2)
    if key1 != key2:
        return []
    base = orders2[0]
    result = []
    for order in orders1:
        mapping = {order[i] + 1: base[i] + 1 for i in range(q1.n)}
        result.append(VertexPermutation.from_mapping(mapping, q1.n))
    return result


def isomorphism(q1: Quiver, q2: Quiver) -> Optional[VertexPermutation]:
    found = isomorphisms(q1, q2)
    if not found:
        return None
    for sigma in found:
        if sigma.is_identity():
            return sigma
    return found[0]


def sink_source_closure(q: Quiver) -> List[Quiver]:
    """Labelled quivers reachable from q by reflections at sinks and sources, q first."""
    seen = {q}
    ordered = [q]
    frontier = [q]
    while frontier:
        next_frontier = []
        for current in frontier:
            for k in sinks_and_sources(current):
                reflected = reflect(current, k)
                if reflected not in seen:
                    seen.add(reflected)
                    ordered.append(reflected)
                    next_frontier.append(reflected)
        frontier = next_frontier
    return ordered
