"""Tensegrity d-characteristic by exact generic sampling.

The generic fiber dimension is the minimum of dim W(G,P) over random integer
configurations. Rank drops happen only on a proper algebraic subset, so a
handful of samples from a wide coordinate range find the generic value.
When that value is 0 the characteristic is at most 0; it is certified to be
exactly 0 only by a witness condition system whose constructed
configurations carry a self-stress.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from ..config.defaults import COORDINATE_BOUND, DEFAULT_SAMPLES, DEFAULT_SEED, TAU_WITNESS_SAMPLES
from ..exceptions import InputError, NotConstructibleError, PreconditionError
from ..geometry import CONDITION_LIBRARY, ConditionSystem, ProjPoint, construct_configuration, evaluate_system
from ..models import Configuration, Edge, Framework, Graph, Stress
from ..sampling import Lcg64, random_circle_points, random_configuration
from .atoms import place_atom
from .connectivity import connectivity, find_induced_k4
from .stresses import fiber_dim, general_position, require_self_stress

logger = logging.getLogger(__name__)

# free vertices of a witness configuration are drawn from this box
WITNESS_SPAN = 1000


def sample_dims(
    g: Graph,
    d: int,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    bound: int = COORDINATE_BOUND,
) -> list[int]:
    """dim W(G,P) at ``samples`` random configurations, in sample order."""
    if samples < 1:
        raise InputError("at least one sample is required")
    rng = Lcg64.seeded(seed)
    dims = []
    for index in range(samples):
        dim = fiber_dim(Framework(g, random_configuration(g.n, d, rng, bound)))
        logger.debug("sample %d of %s in d=%d: dim %d", index, g.label(), d, dim)
        dims.append(dim)
    return dims


def generic_dim(
    g: Graph,
    d: int,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    bound: int = COORDINATE_BOUND,
) -> int:
    return min(sample_dims(g, d, samples, seed, bound))


def tau_complete(n: int, d: int) -> int:
    """Closed form (n-d-1)(n-d)/2 for the complete graph."""
    if n < d + 2:
        raise InputError(f"the complete-graph formula needs n >= d+2, got n={n}, d={d}")
    return (n - d - 1) * (n - d) // 2


# -- witnesses -----------------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    """A condition system whose constructed configurations carry self-stresses."""

    system: ConditionSystem
    config: Configuration
    dims: tuple[int, ...]

    @property
    def kind(self) -> str:
        return self.system.kind or self.system.name


def _circle_base(system: ConditionSystem, rng: Lcg64) -> Optional[list[tuple[Fraction, Fraction]]]:
    """Conic points on the unit circle when all six are base points."""
    conic = system.conic_points
    if conic is None or not all(system.is_base(i) for i in conic):
        return None
    circle = dict(zip(conic, random_circle_points(6, rng)))
    base = [
        circle.get(b) or (Fraction(rng.randint(-WITNESS_SPAN, WITNESS_SPAN)), Fraction(rng.randint(-WITNESS_SPAN, WITNESS_SPAN)))
        for b in range(1, system.base_count + 1)
    ]
    if not evaluate_system(system, [ProjPoint(x, y) for x, y in base]).satisfied:
        return None
    return base


def witness_configuration(system: ConditionSystem, n: int, rng: Lcg64) -> Configuration:
    """Base points from the constructive sampler, the remaining vertices at random."""
    if system.base_count > n:
        raise InputError(f"{system.name} needs {system.base_count} vertices, graph has {n}")
    base = _circle_base(system, rng)
    if base is None:
        base = [p.affine() for p in construct_configuration(system, rng)]
    extra = [
        (Fraction(rng.randint(-WITNESS_SPAN, WITNESS_SPAN)), Fraction(rng.randint(-WITNESS_SPAN, WITNESS_SPAN)))
        for _ in range(n - system.base_count)
    ]
    return Configuration(2, tuple(base + extra))


def find_witness(
    g: Graph,
    systems: Sequence[ConditionSystem],
    seed: int = DEFAULT_SEED,
    samples: int = TAU_WITNESS_SAMPLES,
) -> Optional[Witness]:
    """First system, in library order, forcing dim W >= 1 at every sample."""
    rng = Lcg64.seeded(seed)
    for system in systems:
        if system.base_count > g.n:
            continue
        configs: list[Configuration] = []
        dims: list[int] = []
        try:
            for _ in range(samples):
                config = witness_configuration(system, g.n, rng)
                configs.append(config)
                dims.append(fiber_dim(Framework(g, config)))
        except NotConstructibleError as e:
            logger.debug("skipping %s: %s", system.name, e)
            continue
        if all(dim >= 1 for dim in dims):
            logger.info("witness %s for %s with dims %s", system.name, g.label(), dims)
            return Witness(system, configs[0], tuple(dims))
    return None


@dataclass(frozen=True)
class TcReport:
    """Outcome of :func:`tau_report`.

    A positive generic dimension is the characteristic itself. Otherwise the
    characteristic is at most 0, and exactly 0 when a witness was found.
    """

    graph: Graph
    d: int
    generic_dim: int
    samples_used: int
    dims: tuple[int, ...] = ()
    witness: Optional[Witness] = None

    @property
    def positive(self) -> bool:
        return self.generic_dim >= 1

    @property
    def tau(self) -> Optional[int]:
        if self.positive:
            return self.generic_dim
        return 0 if self.witness is not None else None

    def verdict(self) -> str:
        if self.positive:
            return f"tau = {self.generic_dim}"
        if self.witness is not None:
            return f"tau ≤ 0; witness: {self.witness.kind} → tau = 0"
        return "tau ≤ 0"


def tau_report(
    g: Graph,
    d: int,
    seed: int = DEFAULT_SEED,
    condition_catalog: Optional[Sequence[ConditionSystem]] = None,
    samples: int = DEFAULT_SAMPLES,
    bound: int = COORDINATE_BOUND,
) -> TcReport:
    """Generic dimension and, when it is 0, a search for a witness system.

    Condition systems are planar, so witnesses are only searched for d = 2.
    """
    if g.edge_count == 0:
        raise InputError("graph has no edges")
    dims = sample_dims(g, d, samples, seed, bound)
    gdim = min(dims)
    witness = None
    if gdim == 0 and d == 2:
        systems = CONDITION_LIBRARY if condition_catalog is None else condition_catalog
        witness = find_witness(g, systems, seed)
    return TcReport(g, d, gdim, samples, tuple(dims), witness)


# -- laws ------------------------------------------------------------------------


@dataclass(frozen=True)
class EdgeDrop:
    edge: Edge
    drop: int


def edge_deletion_check(
    g: Graph, d: int, seed: int = DEFAULT_SEED, samples: int = DEFAULT_SAMPLES
) -> list[EdgeDrop]:
    """Generic dimension lost by deleting each edge; every drop should be 0 or 1."""
    base = generic_dim(g, d, samples, seed)
    if base < 2:
        raise PreconditionError("generic dim >= 2", f"generic dim of {g.label()} is {base}")
    drops = []
    for e in g.edge_order:
        drop = base - generic_dim(g.delete_edge(*e), d, samples, seed)
        if drop not in (0, 1):
            logger.warning("edge %d-%d drops the generic dim by %d", e[0], e[1], drop)
        drops.append(EdgeDrop(e, drop))
    return drops


@dataclass(frozen=True)
class BoundCheck:
    """Edge-count lower bound and, where it applies, the predicted exact value."""

    lower_bound: int
    prediction: Optional[int] = None
    reason: str = ""


def bound_check(g: Graph, d: int) -> BoundCheck:
    """m = |E| - (dn - d(d+1)/2), clipped at 0.

    For d = 2 and 2-connected, 3-edge-connected graphs on at most 7 vertices
    the characteristic is predicted to be k - 2n + 3.
    """
    m = max(0, g.edge_count - (d * g.n - d * (d + 1) // 2))
    if d != 2:
        return BoundCheck(m, None, "prediction needs d = 2")
    if g.n > 7:
        return BoundCheck(m, None, "prediction needs n <= 7")
    kappa, lam = connectivity(g)
    if kappa < 2 or lam < 3:
        return BoundCheck(m, None, f"prediction needs kappa >= 2 and lambda >= 3, got {kappa} and {lam}")
    return BoundCheck(m, g.edge_count - 2 * g.n + 3)


@dataclass(frozen=True)
class EdgeAdditionCheck:
    before: int
    after: int
    added: int

    @property
    def holds(self) -> bool:
        return self.after == self.before + self.added


def edge_addition_check(
    g: Graph,
    d: int,
    new_edges: Sequence[Edge],
    seed: int = DEFAULT_SEED,
    samples: int = DEFAULT_SAMPLES,
) -> EdgeAdditionCheck:
    """Adding N edges at the critical edge count raises the generic dim by N.

    The graph must have exactly dn - d(d+1)/2 + tau edges, tau being its
    generic dimension.
    """
    before = generic_dim(g, d, samples, seed)
    critical = d * g.n - d * (d + 1) // 2 + before
    if g.edge_count != critical:
        raise PreconditionError(
            "k = dn - d(d+1)/2 + tau", f"{g.edge_count} edges, critical count is {critical}"
        )
    after = generic_dim(g.with_edges(new_edges), d, samples, seed)
    return EdgeAdditionCheck(before, after, len(new_edges))


def induced_k4_bound(f: Framework) -> Optional[Stress]:
    """Atom stress on an induced K4, extended by zeros, when one is in general position."""
    if f.d != 2:
        raise PreconditionError("d = 2", "the induced K4 bound is planar")
    quad = find_induced_k4(f.graph)
    if quad is None or not general_position(f.config.restrict(quad)):
        return None
    support, atom = place_atom(f.config, quad)
    tensions = {(support[i - 1], support[j - 1]): w for (i, j), w in zip(atom.edges, atom.values)}
    stress = Stress.from_mapping(f.graph, tensions)
    require_self_stress(f, stress)
    return stress
