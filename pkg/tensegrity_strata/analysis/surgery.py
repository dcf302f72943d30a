"""Graph surgeries that transport self-stresses between frameworks.

All surgeries act on a framework of the full graph G in which every named
vertex has a position. The two sides of a surgery are subgraphs of G; the
vertices a side drops stay in the vertex list without edges, so vertex
labels never change and a round trip composes to the identity.

Transport is built from three moves on a tension map:

- add a scaled atom that cancels the tension on one edge;
- merge edges a-m and m-b through a collinear vertex m into a-b;
- split edge a-b at a collinear point m into a-m and m-b.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence, Union

from ..exact.matrix import ZERO
from ..exceptions import GraphError, PreconditionError
from ..models import Configuration, Edge, Framework, Graph, Stress, normalize_edge
from .atoms import cancelling_atom
from .stresses import general_position, is_self_stress, require_self_stress, self_stress_space

logger = logging.getLogger(__name__)

Tensions = dict[Edge, Fraction]


class Direction(str, Enum):
    """Forward maps the second graph of a surgery to the first."""

    FORWARD = "forward"
    BACKWARD = "backward"


@dataclass(frozen=True)
class GeneralSurgery:
    """Exchange of two edges of an induced subgraph H with a one-dimensional fiber.

    Attributes:
        subgraph: Vertices of H in G.
        e1: Edge absent from the source graph.
        e2: Edge absent from the target graph.
        certificate: Optional self-stress of G supported exactly on H.
    """

    subgraph: tuple[int, ...]
    e1: Edge
    e2: Edge
    certificate: Optional[Stress] = None


@dataclass(frozen=True)
class SurgeryI:
    v1: int
    v2: int
    v3: int
    v4: int
    p: int
    q: int

    def named(self) -> dict[str, int]:
        return {"v1": self.v1, "v2": self.v2, "v3": self.v3, "v4": self.v4, "p": self.p, "q": self.q}


@dataclass(frozen=True)
class SurgeryII:
    v1: int
    v2: int
    v3: int
    v4: int
    p: int
    q: int
    r: int
    s: int

    def named(self) -> dict[str, int]:
        return {
            "v1": self.v1, "v2": self.v2, "v3": self.v3, "v4": self.v4,
            "p": self.p, "q": self.q, "r": self.r, "s": self.s,
        }


SurgeryKind = Union[GeneralSurgery, SurgeryI, SurgeryII]


@dataclass(frozen=True)
class SurgerySpec:
    kind: SurgeryKind
    direction: Direction = Direction.FORWARD


@dataclass(frozen=True)
class SurgeryResult:
    """Target framework and the transported self-stress."""

    source: Framework
    target: Framework
    stress: Stress
    checked: tuple[str, ...] = field(default=())


# -- geometry helpers -------------------------------------------------------


def _collinear(c: Configuration, a: int, b: int, m: int) -> bool:
    pa, pb, pm = c.point(a), c.point(b), c.point(m)
    return (pb[0] - pa[0]) * (pm[1] - pa[1]) - (pb[1] - pa[1]) * (pm[0] - pa[0]) == 0


def _require_collinear(c: Configuration, names: dict[int, str], *triple: int) -> str:
    label = "collinear(" + ",".join(names[v] for v in triple) + ")"
    if not _collinear(c, *triple):
        raise PreconditionError(label)
    return label


def _require_not_collinear(c: Configuration, names: dict[int, str], *triple: int) -> str:
    label = "not collinear(" + ",".join(names[v] for v in triple) + ")"
    if _collinear(c, *triple):
        raise PreconditionError(label)
    return label


def _require_general_position(c: Configuration, names: dict[int, str], vs: Sequence[int]) -> str:
    label = "general position(" + ",".join(names[v] for v in vs) + ")"
    if not general_position(c.restrict(vs)):
        raise PreconditionError(label)
    return label


# -- transport moves ----------------------------------------------------------


def _get(tensions: Tensions, a: int, b: int) -> Fraction:
    return tensions.get(normalize_edge(a, b), ZERO)


def _add(tensions: Tensions, a: int, b: int, value: Fraction) -> None:
    e = normalize_edge(a, b)
    tensions[e] = tensions.get(e, ZERO) + value


def add_cancelling_atom(c: Configuration, tensions: Tensions, support: Sequence[int], edge: Edge) -> None:
    atom = cancelling_atom(c, support, normalize_edge(*edge), _get(tensions, *edge))
    for (a, b), value in atom.tensions().items():
        _add(tensions, a, b, value)


def _ratio(c: Configuration, a: int, m: int, b: int) -> Fraction:
    """``t`` with ``m - a = t (b - a)`` for collinear a, m, b."""
    pa, pm, pb = c.point(a), c.point(m), c.point(b)
    k = 0 if pb[0] != pa[0] else 1
    return (pm[k] - pa[k]) / (pb[k] - pa[k])


def merge_edges(c: Configuration, tensions: Tensions, a: int, m: int, b: int) -> None:
    """Replace a-m and m-b, whose forces at m cancel, by a-b."""
    w_am, w_mb = _get(tensions, a, m), _get(tensions, m, b)
    t = _ratio(c, a, m, b)
    if w_am * t != w_mb * (1 - t):
        raise PreconditionError(f"balanced at v{m}", f"forces of v{a}-v{m} and v{m}-v{b} do not cancel at v{m}")
    tensions.pop(normalize_edge(a, m), None)
    tensions.pop(normalize_edge(m, b), None)
    _add(tensions, a, b, w_am * t)


def split_edge(c: Configuration, tensions: Tensions, a: int, m: int, b: int) -> None:
    """Replace a-b by a-m and m-b through the collinear point m."""
    w_ab = tensions.pop(normalize_edge(a, b), ZERO)
    t = _ratio(c, a, m, b)
    _add(tensions, a, m, w_ab / t)
    _add(tensions, m, b, w_ab / (1 - t))


def _finish(f: Framework, target_graph: Graph, tensions: Tensions) -> Stress:
    for e, w in tensions.items():
        if w != 0 and e not in target_graph.edges:
            raise PreconditionError(
                f"zero tension on {e[0]}-{e[1]}", f"edge {e[0]}-{e[1]} keeps tension {w} after transport"
            )
    stress = Stress.from_mapping(target_graph, {e: w for e, w in tensions.items() if e in target_graph.edges})
    require_self_stress(f.with_graph(target_graph), stress)
    return stress


def _source_tensions(source: Framework, w: Stress) -> Tensions:
    if w.edges != source.graph.edge_order:
        raise GraphError("stress is not keyed by the edges of the source graph")
    require_self_stress(source, w)
    return dict(w.as_dict())


# -- general surgery ----------------------------------------------------------


def surgery_certificate(f: Framework, spec: GeneralSurgery) -> Stress:
    """Self-stress of G supported on H, from the one-dimensional fiber of H."""
    sub, index_map = f.graph.induced_subgraph(spec.subgraph)
    local = Framework(sub, f.config.restrict([index_map[i] for i in sub.vertices]))
    space = self_stress_space(local)
    if space.dim != 1:
        raise PreconditionError("dim W(H) = 1", f"W(H) has dimension {space.dim} at this configuration")
    tensions = {(index_map[i], index_map[j]): t for (i, j), t in zip(space.basis[0].edges, space.basis[0].values)}
    return Stress.from_mapping(f.graph, tensions)


def general_surgery(g: Graph, spec: GeneralSurgery, f: Framework, w: Stress) -> Stress:
    """Map a self-stress of G minus e1 to one of G minus e2.

    Adds the multiple of the certificate that cancels the tension on e2.
    """
    if f.graph != g:
        raise GraphError("framework is not drawn on the given graph")
    e1, e2 = normalize_edge(*spec.e1), normalize_edge(*spec.e2)
    h_edges = {e for e in g.edges if set(e) <= set(spec.subgraph)}
    for name, e in (("e1", e1), ("e2", e2)):
        if e not in h_edges:
            raise PreconditionError(f"{name} in H", f"{name}={e[0]}-{e[1]} is not an edge of H")

    if spec.certificate is None:
        certificate = surgery_certificate(f, spec)
    else:
        certificate = spec.certificate
        if certificate.edges != g.edge_order or not is_self_stress(f, certificate):
            raise PreconditionError("certificate is a self-stress of G")
        surgery_certificate(f, spec)
    if certificate.support != frozenset(h_edges):
        raise PreconditionError("certificate supported on H", "certificate must be nonzero exactly on the edges of H")

    source_graph = g.delete_edge(*e1)
    target_graph = g.delete_edge(*e2)
    tensions = _source_tensions(f.with_graph(source_graph), w)
    tensions.setdefault(e1, ZERO)
    c = -tensions.get(e2, ZERO) / certificate.tension(*e2)
    for e, value in certificate.as_dict().items():
        _add(tensions, *e, c * value)
    logger.info("general surgery %s -> %s with scale %s", e1, e2, c)
    return _finish(f, target_graph, tensions)


# -- surgery I ------------------------------------------------------------------


def _check_k4(g: Graph, quad: Sequence[int]) -> None:
    for a, b in combinations(quad, 2):
        if not g.has_edge(a, b):
            raise PreconditionError(f"edge v{a}-v{b}", f"K4 on {quad} is missing edge {a}-{b}")


def _check_attachments(g: Graph, quad: Sequence[int], expected: dict[int, set[int]], names: dict[int, str]) -> None:
    for v, outside in expected.items():
        actual = {u for u in g.neighbors(v) if u not in quad}
        if actual != outside:
            label = ",".join(names.get(u, f"v{u}") for u in sorted(actual ^ outside))
            raise PreconditionError(
                f"attachments of {names[v]}",
                f"edges from {names[v]} to outside vertices must be exactly "
                + ",".join(names[u] for u in sorted(outside))
                + f" (mismatch: {label})",
            )


def _distinct(spec: Union[SurgeryI, SurgeryII]) -> dict[int, str]:
    named = spec.named()
    if len(set(named.values())) != len(named):
        raise PreconditionError("distinct vertices", "named surgery vertices must be distinct")
    return {v: k for k, v in named.items()}


def surgery_i_graphs(g: Graph, spec: SurgeryI) -> tuple[Graph, Graph]:
    """``(G1, G2)``: G without v2, v3 and G without v1."""
    return g.without_vertices([spec.v2, spec.v3]), g.without_vertices([spec.v1])


def check_surgery_i(f: Framework, spec: SurgeryI, direction: Direction) -> list[str]:
    names = _distinct(spec)
    g, c = f.graph, f.config
    if f.d != 2:
        raise PreconditionError("d = 2", "surgeries I and II are planar")
    quad = (spec.v1, spec.v2, spec.v3, spec.v4)
    _check_k4(g, quad)
    _check_attachments(g, quad, {spec.v1: {spec.p, spec.q}, spec.v2: {spec.p}, spec.v3: {spec.q}}, names)
    checked = [
        _require_collinear(c, names, spec.p, spec.v1, spec.v2),
        _require_collinear(c, names, spec.q, spec.v1, spec.v3),
    ]
    if direction is Direction.FORWARD:
        triples = [
            (spec.p, spec.v2, spec.v3), (spec.q, spec.v2, spec.v3), (spec.p, spec.v2, spec.v4),
            (spec.q, spec.v3, spec.v4), (spec.v2, spec.v3, spec.v4),
        ]
    else:
        triples = [(spec.p, spec.v1, spec.q), (spec.p, spec.v1, spec.v4), (spec.q, spec.v1, spec.v4)]
    checked += [_require_not_collinear(c, names, *t) for t in triples]
    checked.append(_require_general_position(c, names, quad))
    for a, b in ((spec.p, spec.v1), (spec.p, spec.v2), (spec.q, spec.v1), (spec.q, spec.v3)):
        if c.point(a) == c.point(b):
            raise PreconditionError(f"{names[a]} != {names[b]}")
    return checked


def surgery_I(f: Framework, spec: SurgeryI, w: Stress, direction: Direction = Direction.FORWARD) -> SurgeryResult:
    """Transport a self-stress between G without v1 and G without v2, v3.

    Forward starts on G without v1: the atom on v1..v4 cancelling v2v3 also
    clears v2v4 and v3v4, and the collinear pairs p-v2-v1, q-v3-v1 merge
    into pv1 and qv1. Backward runs the construction in reverse.
    """
    checked = check_surgery_i(f, spec, direction)
    g1, g2 = surgery_i_graphs(f.graph, spec)
    c = f.config
    quad = (spec.v1, spec.v2, spec.v3, spec.v4)
    if direction is Direction.FORWARD:
        source, target = f.with_graph(g2), f.with_graph(g1)
        tensions = _source_tensions(source, w)
        add_cancelling_atom(c, tensions, quad, (spec.v2, spec.v3))
        merge_edges(c, tensions, spec.p, spec.v2, spec.v1)
        merge_edges(c, tensions, spec.q, spec.v3, spec.v1)
    else:
        source, target = f.with_graph(g1), f.with_graph(g2)
        tensions = _source_tensions(source, w)
        split_edge(c, tensions, spec.p, spec.v2, spec.v1)
        split_edge(c, tensions, spec.q, spec.v3, spec.v1)
        add_cancelling_atom(c, tensions, quad, (spec.v1, spec.v2))
    stress = _finish(f, target.graph, tensions)
    logger.info("surgery I %s transported a stress onto %d edges", direction.value, len(stress.support))
    return SurgeryResult(source, target, stress, tuple(checked))


# -- surgery II -----------------------------------------------------------------


def surgery_ii_graphs(g: Graph, spec: SurgeryII) -> tuple[Graph, Graph]:
    """``(G1, G2)``: G without v1, v4 and G without v2, v3."""
    return g.without_vertices([spec.v1, spec.v4]), g.without_vertices([spec.v2, spec.v3])


def check_surgery_ii(f: Framework, spec: SurgeryII, direction: Direction) -> list[str]:
    names = _distinct(spec)
    g, c = f.graph, f.config
    if f.d != 2:
        raise PreconditionError("d = 2", "surgeries I and II are planar")
    quad = (spec.v1, spec.v2, spec.v3, spec.v4)
    _check_k4(g, quad)
    _check_attachments(
        g,
        quad,
        {
            spec.v1: {spec.p, spec.q},
            spec.v2: {spec.p, spec.r},
            spec.v3: {spec.q, spec.s},
            spec.v4: {spec.r, spec.s},
        },
        names,
    )
    checked = [
        _require_collinear(c, names, spec.p, spec.v1, spec.v2),
        _require_collinear(c, names, spec.q, spec.v1, spec.v3),
        _require_collinear(c, names, spec.r, spec.v2, spec.v4),
        _require_collinear(c, names, spec.s, spec.v3, spec.v4),
    ]
    if direction is Direction.FORWARD:
        triples = [
            (spec.p, spec.q, spec.v1), (spec.p, spec.v1, spec.v4), (spec.r, spec.v1, spec.v4),
            (spec.q, spec.v1, spec.v4), (spec.s, spec.v1, spec.v4), (spec.r, spec.s, spec.v4),
        ]
    else:
        triples = [
            (spec.p, spec.v2, spec.v3), (spec.q, spec.v2, spec.v3), (spec.p, spec.v2, spec.r),
            (spec.q, spec.v3, spec.s), (spec.r, spec.v2, spec.v3), (spec.s, spec.v2, spec.v3),
        ]
    checked += [_require_not_collinear(c, names, *t) for t in triples]
    checked.append(_require_general_position(c, names, quad))
    for a, b in (
        (spec.p, spec.v1), (spec.p, spec.v2), (spec.q, spec.v1), (spec.q, spec.v3),
        (spec.r, spec.v2), (spec.r, spec.v4), (spec.s, spec.v3), (spec.s, spec.v4),
    ):
        if c.point(a) == c.point(b):
            raise PreconditionError(f"{names[a]} != {names[b]}")
    return checked


def surgery_II(f: Framework, spec: SurgeryII, w: Stress, direction: Direction = Direction.FORWARD) -> SurgeryResult:
    """Exchange v1, v4 for v2, v3.

    Forward starts on G without v2, v3: the atom cancelling v1v4 is added,
    then p-v1-v2, q-v1-v3, r-v4-v2 and s-v4-v3 merge into pv2, qv3, rv2 and
    sv3. Backward splits those four edges and cancels v2v3.
    """
    checked = check_surgery_ii(f, spec, direction)
    g1, g2 = surgery_ii_graphs(f.graph, spec)
    c = f.config
    quad = (spec.v1, spec.v2, spec.v3, spec.v4)
    if direction is Direction.FORWARD:
        source, target = f.with_graph(g2), f.with_graph(g1)
        tensions = _source_tensions(source, w)
        add_cancelling_atom(c, tensions, quad, (spec.v1, spec.v4))
        merge_edges(c, tensions, spec.p, spec.v1, spec.v2)
        merge_edges(c, tensions, spec.q, spec.v1, spec.v3)
        merge_edges(c, tensions, spec.r, spec.v4, spec.v2)
        merge_edges(c, tensions, spec.s, spec.v4, spec.v3)
    else:
        source, target = f.with_graph(g1), f.with_graph(g2)
        tensions = _source_tensions(source, w)
        split_edge(c, tensions, spec.p, spec.v1, spec.v2)
        split_edge(c, tensions, spec.q, spec.v1, spec.v3)
        split_edge(c, tensions, spec.r, spec.v4, spec.v2)
        split_edge(c, tensions, spec.s, spec.v4, spec.v3)
        add_cancelling_atom(c, tensions, quad, (spec.v2, spec.v3))
    stress = _finish(f, target.graph, tensions)
    logger.info("surgery II %s transported a stress onto %d edges", direction.value, len(stress.support))
    return SurgeryResult(source, target, stress, tuple(checked))


def apply_surgery(f: Framework, spec: SurgerySpec, w: Stress) -> SurgeryResult:
    """Dispatch on the surgery kind; for general surgery backward swaps e1 and e2."""
    kind = spec.kind
    if isinstance(kind, SurgeryI):
        return surgery_I(f, kind, w, spec.direction)
    if isinstance(kind, SurgeryII):
        return surgery_II(f, kind, w, spec.direction)
    if spec.direction is Direction.BACKWARD:
        kind = GeneralSurgery(kind.subgraph, kind.e2, kind.e1, kind.certificate)
    source = f.with_graph(f.graph.delete_edge(*kind.e1))
    target = f.with_graph(f.graph.delete_edge(*kind.e2))
    stress = general_surgery(f.graph, kind, f, w)
    return SurgeryResult(source, target, stress)


def surgery_graphs(f: Framework, spec: SurgerySpec) -> tuple[Graph, Graph]:
    """Source and target graphs of ``spec`` in its direction."""
    kind = spec.kind
    if isinstance(kind, GeneralSurgery):
        g1, g2 = f.graph.delete_edge(*kind.e2), f.graph.delete_edge(*kind.e1)
    elif isinstance(kind, SurgeryI):
        g1, g2 = surgery_i_graphs(f.graph, kind)
    else:
        g1, g2 = surgery_ii_graphs(f.graph, kind)
    return (g2, g1) if spec.direction is Direction.FORWARD else (g1, g2)


def transport_basis(f: Framework, spec: SurgerySpec) -> tuple[int, int, list[Stress]]:
    """Map a basis of the source fiber; returns source dim, target dim, images."""
    source_graph, target_graph = surgery_graphs(f, spec)
    space = self_stress_space(f.with_graph(source_graph))
    images = [apply_surgery(f, spec, b).stress for b in space.basis]
    target_dim = self_stress_space(f.with_graph(target_graph)).dim
    return space.dim, target_dim, images
