"""Atoms and atom decompositions of tensegrities on complete graphs.

An atom is the tensegrity on K_{d+2} over d+2 points in general position.
Its self-stress space is a line and every tension on it is nonzero, so a
single edge tension fixes the whole atom.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from ..exact.matrix import ZERO
from ..exceptions import DimensionError, GeneralPositionError, NotSelfStressError
from ..models import Configuration, Edge, Framework, Graph, Stress, Tensegrity, normalize_edge
from .stresses import general_position, require_self_stress, self_stress_space

logger = logging.getLogger(__name__)


def atom_stress(c: Configuration) -> Stress:
    """The self-stress of K_{d+2} on ``c``, with tension 1 on edge 1-2."""
    if c.n != c.d + 2:
        raise DimensionError(f"an atom in dimension {c.d} has {c.d + 2} points, got {c.n}")
    if not general_position(c):
        raise GeneralPositionError("not in general position")
    space = self_stress_space(Framework(Graph.complete(c.n), c))
    if space.dim != 1:
        raise GeneralPositionError(f"atom fiber has dimension {space.dim}")
    return space.basis[0].normalized()


@dataclass(frozen=True)
class Atom:
    """A scaled atom placed on vertices of a larger framework.

    Attributes:
        support: The d+2 vertex indices, ascending.
        stress: Normalized atom stress on K_{d+2} in support order.
        coefficient: Scale applied to ``stress``.
    """

    support: tuple[int, ...]
    stress: Stress
    coefficient: Fraction

    def tensions(self) -> dict[Edge, Fraction]:
        """Scaled tensions keyed by edges of the host framework."""
        return {
            (self.support[i - 1], self.support[j - 1]): self.coefficient * w
            for (i, j), w in zip(self.stress.edges, self.stress.values)
        }

    def tensegrity(self, config: Configuration) -> Tensegrity:
        sub = config.restrict(self.support)
        graph = Graph.complete(len(self.support))
        return Tensegrity(Framework(graph, sub), self.stress.scaled(self.coefficient))


def place_atom(config: Configuration, support: Sequence[int]) -> tuple[tuple[int, ...], Stress]:
    support = tuple(sorted(support))
    return support, atom_stress(config.restrict(support))


def cancelling_atom(config: Configuration, support: Sequence[int], edge: Edge, tension: Fraction) -> Atom:
    """The atom on ``support`` whose tension on ``edge`` is ``-tension``."""
    support, stress = place_atom(config, support)
    local = (support.index(edge[0]) + 1, support.index(edge[1]) + 1)
    unit = stress.tension(*local)
    return Atom(support, stress, -tension / unit)


def _reference_sets(others: list[int], u: int, d: int):
    pool = [v for v in others if v != u]
    return combinations(pool, d)


def decompose(f: Framework, w: Stress) -> list[Atom]:
    """Write a self-stress as a sum of atoms.

    Vertices are peeled in descending index. At vertex ``p`` the reference
    set is the d lowest remaining vertices; every other remaining neighbour
    ``u`` with nonzero tension on ``pu`` is cancelled by the atom on ``p``,
    ``u`` and the references. The d edges from ``p`` to the references then
    carry no tension. The last d+2 vertices form one final atom.

    Raises:
        GeneralPositionError: The configuration is not in general position.
        NotSelfStressError: ``w`` is not a self-stress of ``f``.
    """
    if not general_position(f.config):
        raise GeneralPositionError("not in general position")
    require_self_stress(f, w)

    d, n = f.d, f.n
    running: dict[Edge, Fraction] = {e: ZERO for e in combinations(range(1, n + 1), 2)}
    running.update(w.as_dict())
    atoms: list[Atom] = []

    if all(t == 0 for t in running.values()):
        return atoms

    remaining = list(range(1, n + 1))
    while len(remaining) > d + 2:
        p = remaining.pop()
        refs = remaining[:d]
        for u in remaining[d:]:
            t = running[normalize_edge(p, u)]
            if t == 0:
                continue
            atom = None
            for candidate in [refs, *(list(c) for c in _reference_sets(remaining, u, d))]:
                support = sorted({p, u, *candidate})
                if general_position(f.config.restrict(support)):
                    atom = cancelling_atom(f.config, support, normalize_edge(p, u), t)
                    break
            if atom is None:
                raise GeneralPositionError(f"no atom through v{p} and v{u} is in general position")
            for e, value in atom.tensions().items():
                running[normalize_edge(*e)] += value
            atoms.append(atom)
        leftover = {v: running[normalize_edge(p, v)] for v in remaining if running[normalize_edge(p, v)] != 0}
        if leftover:
            raise NotSelfStressError(p, tuple(leftover.values()))
        logger.debug("peeled v%d with %d atoms so far", p, len(atoms))

    base_edges = list(combinations(remaining, 2))
    if any(running[e] != 0 for e in base_edges):
        support, stress = place_atom(f.config, remaining)
        coefficient = running[base_edges[0]] / stress.values[0]
        atom = Atom(support, stress, coefficient)
        for e, value in atom.tensions().items():
            if running[e] != value:
                raise NotSelfStressError(e[0], (running[e] - value,))
        atoms.append(atom)
    return atoms


def atom_sum(f: Framework, atoms: Sequence[Atom]) -> Stress:
    """Total tension of ``atoms`` on the complete graph over ``f``'s points."""
    graph = Graph.complete(f.n)
    total: dict[Edge, Fraction] = {}
    for atom in atoms:
        for e, value in atom.tensions().items():
            total[e] = total.get(e, ZERO) + value
    return Stress.from_mapping(graph, total)


def atom_count_bound(n: int, d: int) -> int:
    return max(0, (n - d - 1) * (n - d) // 2)
