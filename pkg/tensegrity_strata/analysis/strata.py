"""Sign-pattern cells of the self-stress space.

W(G,P) is cut by the central hyperplanes ``{w_e = 0}``, one per edge. Each
face of that arrangement is a cone of self-stresses sharing one strut-cable
matrix M, and the fingerprint S(G,P) collects every realized M together with
the dimension of its cone.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from itertools import product
from typing import Optional

from ..exact.matrix import ZERO, Vector, dot
from ..exact.simplex import CellSpec, cell_feasible_dim, sign_of
from ..exceptions import GraphError, InputError
from ..models import Configuration, Fingerprint, Framework, Graph, SelfStressSpace, SignMatrix, StratumSymbol
from .stresses import self_stress_space

logger = logging.getLogger(__name__)

SignVector = tuple[int, ...]


def _symbol(space: SelfStressSpace, signs: SignVector, dim: int) -> StratumSymbol:
    graph = space.framework.graph
    return StratumSymbol(SignMatrix(graph.n, graph.edge_order, signs), dim)


def _signs_at(functionals: list[Vector], point: Vector) -> SignVector:
    return tuple(sign_of(dot(f, point)) for f in functionals)


def _cell_spec(functionals: list[Vector], signs: SignVector, k: int) -> CellSpec:
    return CellSpec(
        ambient_dim=k,
        equalities=tuple(f for f, s in zip(functionals, signs) if s == 0),
        positives=tuple(f for f, s in zip(functionals, signs) if s > 0),
        negatives=tuple(f for f, s in zip(functionals, signs) if s < 0),
    )


def _half(r: Vector) -> int:
    return 0 if r[1] > 0 or (r[1] == 0 and r[0] > 0) else 1


def _cross(a: Vector, b: Vector) -> Fraction:
    return a[0] * b[1] - a[1] * b[0]


def _angle_cmp(a: Vector, b: Vector) -> int:
    ha, hb = _half(a), _half(b)
    if ha != hb:
        return ha - hb
    c = _cross(a, b)
    return -1 if c > 0 else 1 if c < 0 else 0


def _planar_rays(functionals: list[Vector]) -> list[Vector]:
    """Rays of the line arrangement in the plane, sorted counterclockwise."""
    rays: list[Vector] = []
    for a, b in functionals:
        if a == 0 and b == 0:
            continue
        for r in ((-b, a), (b, -a)):
            if not any(_cross(r, s) == 0 and dot(r, s) > 0 for s in rays):
                rays.append(r)
    return sorted(rays, key=cmp_to_key(_angle_cmp))


def _direct_cells(space: SelfStressSpace) -> dict[SignVector, int]:
    k = space.dim
    functionals = space.coordinate_functionals()
    cells: dict[SignVector, int] = {(0,) * len(functionals): 0}
    if k == 1:
        up = _signs_at(functionals, (Fraction(1),))
        cells[up] = 1
        cells[tuple(-s for s in up)] = 1
    elif k == 2:
        rays = _planar_rays(functionals)
        for idx, r in enumerate(rays):
            cells[_signs_at(functionals, r)] = 1
            nxt = rays[(idx + 1) % len(rays)]
            if _cross(r, nxt) > 0:
                sample = (r[0] + nxt[0], r[1] + nxt[1])
            else:
                sample = (-r[1], r[0])
            cells[_signs_at(functionals, sample)] = 2
    return cells


def _incremental_cells(space: SelfStressSpace) -> dict[SignVector, int]:
    """Insert the hyperplanes one at a time, splitting every realized face.

    Each candidate extension of a realized sign vector is certified by an
    exact LP, so the result lists exactly the nonempty faces.
    """
    k = space.dim
    functionals = space.coordinate_functionals()
    faces: dict[SignVector, int] = {(): k}
    lp_calls = 0
    for t, f in enumerate(functionals, start=1):
        prefix = functionals[:t]
        grown: dict[SignVector, int] = {}
        for signs in faces:
            if all(c == 0 for c in f):
                grown[signs + (0,)] = faces[signs]
                continue
            for s in (1, 0, -1):
                candidate = signs + (s,)
                result = cell_feasible_dim(_cell_spec(prefix, candidate, k))
                lp_calls += 1
                if result.feasible:
                    grown[candidate] = result.dim
        faces = grown
    logger.debug("incremental enumeration: %d faces from %d LPs", len(faces), lp_calls)
    return faces


def enumerate_cells_incremental(space: SelfStressSpace) -> Fingerprint:
    if space.dim == 0:
        return Fingerprint.of([_symbol(space, (0,) * len(space.edge_order), 0)])
    return Fingerprint.of(_symbol(space, s, i) for s, i in _incremental_cells(space).items())


def enumerate_cells(space: SelfStressSpace) -> Fingerprint:
    """The fingerprint S(G,P) of a self-stress space.

    Fibers of dimension at most 2 are enumerated directly from the rays of
    the arrangement; larger ones by incremental insertion.
    """
    if space.dim > 2:
        return enumerate_cells_incremental(space)
    cells = _direct_cells(space)
    logger.debug("direct enumeration: %d cells in a %d-dimensional fiber", len(cells), space.dim)
    return Fingerprint.of(_symbol(space, s, i) for s, i in cells.items())


def fingerprint(f: Framework) -> Fingerprint:
    return enumerate_cells(self_stress_space(f))


def fiber_equivalent(f1: Framework, f2: Framework) -> bool:
    """Whether S(G,P1) = S(G,P2).

    Equal fingerprints are equivalent to a sign-preserving homeomorphism of
    the two linear fibers. This says nothing about whether P1 and P2 lie in
    the same connected stratum.
    """
    if f1.graph != f2.graph:
        raise GraphError("frameworks have different graphs")
    return fingerprint(f1) == fingerprint(f2)


def gk_stratum_member(f: Framework, k: int) -> bool:
    """Whether dim W(G,P) >= k."""
    if k < 1:
        raise InputError("k must be at least 1")
    return self_stress_space(f).dim >= k


def visible_space(space: SelfStressSpace) -> bool:
    # some self-stress avoids every hyperplane w_e = 0 iff none of them
    # contains the whole fiber
    if space.dim == 0:
        return False
    return all(any(c != 0 for c in f) for f in space.coordinate_functionals())


def visible(f: Framework) -> bool:
    """Whether some self-stress is nonzero on every edge."""
    return visible_space(self_stress_space(f))


def always_zero_edges(space: SelfStressSpace) -> list[tuple[int, int]]:
    """Edges whose tension vanishes on the whole fiber."""
    return [
        e for e, f in zip(space.edge_order, space.coordinate_functionals())
        if all(c == 0 for c in f)
    ]


@dataclass(frozen=True)
class LineStratum:
    """One order type of three points on a line, with its fiber dimension."""

    label: str
    config: Configuration
    computed_dim: int
    stated_dim: Optional[int]
    fingerprint: Fingerprint

    @property
    def agrees(self) -> bool:
        return self.stated_dim is None or self.stated_dim == self.computed_dim


# fiber dimensions stated in the literature for K3 on a line, by coincidence type
STATED_K3_LINE_DIMS = {"all equal": 3, "two coincide": 2, "distinct": 1}


def k3_line_strata() -> list[LineStratum]:
    """The 13 order types of K3 in d=1 with computed fiber data.

    The two-coincide types are reported with the computed dimension; the
    stated value is kept alongside so the discrepancy stays visible.
    """
    graph = Graph.complete(3)
    rows: list[LineStratum] = []
    seen: set[tuple[int, ...]] = set()
    for values in product(range(3), repeat=3):
        used = sorted(set(values))
        if used != list(range(len(used))) or values in seen:
            continue
        seen.add(values)
        kind = {1: "all equal", 2: "two coincide", 3: "distinct"}[len(used)]
        config = Configuration.from_values(1, [[v] for v in values])
        space = self_stress_space(Framework(graph, config))
        rows.append(
            LineStratum(
                label="x=" + ",".join(str(v) for v in values),
                config=config,
                computed_dim=space.dim,
                stated_dim=STATED_K3_LINE_DIMS[kind],
                fingerprint=enumerate_cells(space),
            )
        )
    return rows
