"""Equilibrium matrices, self-stress spaces and tensegrity sums."""

from __future__ import annotations

import logging
from fractions import Fraction
from itertools import combinations

from ..exact.matrix import ONE, ZERO, Matrix, Vector, det, nullspace
from ..exceptions import DimensionError, GraphError, NotSelfStressError
from ..models import Configuration, Framework, Graph, SelfStressSpace, SignMatrix, Stress, Tensegrity

logger = logging.getLogger(__name__)


def equilibrium_matrix(f: Framework) -> Matrix:
    """The (d*n) x |E| matrix whose null space is W(G,P).

    The column of edge ``{i, j}`` holds ``p_j - p_i`` in the rows of vertex
    ``i`` and ``p_i - p_j`` in the rows of vertex ``j``.
    """
    d, n = f.d, f.n
    edges = f.graph.edge_order
    rows = [[ZERO] * len(edges) for _ in range(d * n)]
    for col, (i, j) in enumerate(edges):
        pi, pj = f.config.point(i), f.config.point(j)
        for k in range(d):
            rows[(i - 1) * d + k][col] = pj[k] - pi[k]
            rows[(j - 1) * d + k][col] = pi[k] - pj[k]
    return Matrix.from_rows(rows, cols=len(edges))


def self_stress_space(f: Framework) -> SelfStressSpace:
    basis = nullspace(equilibrium_matrix(f))
    edges = f.graph.edge_order
    logger.debug("self-stress space of %d edges at n=%d, d=%d has dim %d", len(edges), f.n, f.d, len(basis))
    return SelfStressSpace(f, tuple(Stress(edges, v) for v in basis))


def fiber_dim(f: Framework) -> int:
    return self_stress_space(f).dim


def verify_self_stress(f: Framework, w: Stress) -> list[Vector]:
    """Residual of the equilibrium sum at each vertex, in vertex order."""
    if w.edges != f.graph.edge_order:
        raise DimensionError("stress is keyed by edges of another graph")
    d = f.d
    residuals = [[ZERO] * d for _ in range(f.n)]
    for (i, j), t in zip(w.edges, w.values):
        if t == 0:
            continue
        pi, pj = f.config.point(i), f.config.point(j)
        for k in range(d):
            delta = t * (pj[k] - pi[k])
            residuals[i - 1][k] += delta
            residuals[j - 1][k] -= delta
    return [tuple(r) for r in residuals]


def is_self_stress(f: Framework, w: Stress) -> bool:
    return all(all(c == 0 for c in r) for r in verify_self_stress(f, w))


def require_self_stress(f: Framework, w: Stress) -> None:
    """Raise :class:`NotSelfStressError` at the first unbalanced vertex."""
    for v, r in enumerate(verify_self_stress(f, w), start=1):
        if any(c != 0 for c in r):
            raise NotSelfStressError(v, r)


def sign_matrix(w: Stress, n: int) -> SignMatrix:
    """Sign matrix of ``w`` on vertices 1..n; pass the framework's n."""
    top = max((j for _, j in w.edges), default=0)
    if top > n:
        raise DimensionError(f"stress uses vertex {top} but n = {n}")
    return SignMatrix.of(n, w)


def add_tensegrities(t1: Tensegrity, t2: Tensegrity) -> Tensegrity:
    """Sum of two tensegrities, identifying vertices with equal coordinates.

    The points of ``t1`` keep their indices; points of ``t2`` that coincide
    with a point of ``t1`` are merged with it and the others are appended.
    Tensions on common edges add up.
    """
    f1, f2 = t1.framework, t2.framework
    if f1.d != f2.d:
        raise DimensionError(f"cannot add tensegrities in dimensions {f1.d} and {f2.d}")
    require_self_stress(f1, t1.stress)
    require_self_stress(f2, t2.stress)

    points = list(f1.config.points)
    first_index: dict[Vector, int] = {}
    for v, p in enumerate(points, start=1):
        first_index.setdefault(p, v)
    index = {}
    for v, p in enumerate(f2.config.points, start=1):
        if p in first_index:
            index[v] = first_index[p]
        else:
            points.append(p)
            index[v] = len(points)

    tensions: dict[tuple[int, int], Fraction] = dict(t1.stress.as_dict())
    for (i, j), t in t2.stress.as_dict().items():
        a, b = index[i], index[j]
        if a == b:
            raise GraphError(f"edge {i}-{j} collapses onto v{a}")
        e = (min(a, b), max(a, b))
        tensions[e] = tensions.get(e, ZERO) + t

    graph = Graph(len(points), frozenset(tensions))
    framework = Framework(graph, Configuration(f1.d, tuple(points)))
    stress = Stress.from_mapping(graph, tensions)
    require_self_stress(framework, stress)
    return Tensegrity(framework, stress)


def homogeneous_det(points: list[Vector]) -> Fraction:
    """Determinant of the points with a trailing 1 appended to each."""
    return det(Matrix.from_rows([[*p, ONE] for p in points]))


def general_position(c: Configuration) -> bool:
    """True iff no d+1 of the points lie in a common hyperplane."""
    k = c.d + 1
    for subset in combinations(c.points, k):
        if homogeneous_det(list(subset)) == 0:
            return False
    return True
