"""Tests for sign-pattern cells and fingerprints."""

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from tensegrity_strata.analysis import (
    always_zero_edges,
    enumerate_cells,
    enumerate_cells_incremental,
    fiber_equivalent,
    fingerprint,
    gk_stratum_member,
    is_self_stress,
    k3_line_strata,
    self_stress_space,
    visible,
)
from tensegrity_strata.catalog import lookup
from tensegrity_strata.exact import CellSpec, cell_feasible_dim
from tensegrity_strata.exceptions import GraphError, InputError
from tensegrity_strata.models import Configuration, Framework, Graph, SignMatrix, Stress, StratumSymbol
from tensegrity_strata.sampling import Lcg64, random_circle_points, random_configuration


def k3_line(*xs):
    return Framework(Graph.complete(3), Configuration.from_values(1, [[x] for x in xs]))


class TestFingerprint:
    """Tests for fingerprint computation."""

    def test_k4_example_has_three_symbols(self, k4_framework, k4_stress):
        """Zero, M and -M: the fiber is a line."""
        fp = fingerprint(k4_framework)
        m = SignMatrix.of(4, k4_stress)
        assert len(fp) == 3
        assert StratumSymbol(m, 1) in fp
        assert StratumSymbol(-m, 1) in fp
        assert StratumSymbol(SignMatrix.zero(k4_framework.graph), 0) in fp

    def test_k3_two_coincide(self):
        """At (0, 0, 1) only edge 12 can carry tension."""
        fp = fingerprint(k3_line(0, 0, 1))
        patterns = {(s.m.pattern(), s.i) for s in fp}
        assert patterns == {("000", 0), ("+00", 1), ("-00", 1)}

    def test_k3_all_coincide_realizes_every_pattern(self):
        """With all points equal every sign vector is a cell: 27 of them."""
        fp = fingerprint(k3_line(0, 0, 0))
        assert len(fp) == 27
        assert fp.dimension_of(SignMatrix(3, Graph.complete(3).edge_order, (1, -1, 1))) == 3

    def test_antipodal_symmetry(self, rng):
        """Every cell M, i comes with -M, i."""
        f = Framework(Graph.complete(5), random_configuration(5, 2, rng, bound=100))
        fp = fingerprint(f)
        for s in fp:
            assert StratumSymbol(-s.m, s.i) in fp

    @given(seed=st.integers(min_value=0, max_value=2**32))
    @settings(max_examples=15, deadline=None)
    def test_direct_matches_incremental(self, seed):
        """Planar ray sweeping and LP insertion give the same cells."""
        g = Graph.complete(5).delete_edge(1, 2)
        config = random_configuration(5, 2, Lcg64.seeded(seed), bound=30)
        space = self_stress_space(Framework(g, config))
        assert enumerate_cells(space) == enumerate_cells_incremental(space)

    def test_direct_matches_incremental_two_dimensional(self):
        """K5 minus an edge has a two-dimensional fiber in the plane."""
        g = Graph.complete(5).delete_edge(1, 2)
        space = self_stress_space(Framework(g, random_configuration(5, 2, Lcg64.seeded(3), bound=100)))
        assert space.dim == 2
        assert enumerate_cells(space) == enumerate_cells_incremental(space)

    def test_zero_fiber(self):
        """A fiber of dimension 0 has only the zero cell."""
        f = Framework(Graph.cycle(4), Configuration.from_values(2, [[0, 0], [1, 0], [1, 1], [0, 1]]))
        fp = fingerprint(f)
        assert len(fp) == 1
        assert next(iter(fp)).i == 0


def realize(space, signs):
    """Feasibility of one sign vector over the fiber, solved independently of the enumeration."""
    functionals = space.coordinate_functionals()
    cell = CellSpec(
        space.dim,
        equalities=tuple(f for f, s in zip(functionals, signs) if s == 0),
        positives=tuple(f for f, s in zip(functionals, signs) if s > 0),
        negatives=tuple(f for f, s in zip(functionals, signs) if s < 0),
    )
    return cell_feasible_dim(cell)


def stress_at(space, coeffs):
    w = Stress.zeros(space.framework.graph)
    for c, b in zip(coeffs, space.basis):
        w = w + b.scaled(c)
    return w


def is_face(small, big):
    return all(a == 0 or a == b for a, b in zip(small, big))


class TestFingerprintClosure:
    """Every symbol is realized, and faces of a cell are lower-dimensional symbols."""

    @given(
        name=st.sampled_from(["k4_d2", "k5_d2", "k5_d3", "k6_d3", "two_block_k4"]),
        seed=st.integers(min_value=0, max_value=2**32),
    )
    @settings(max_examples=10, deadline=None)
    def test_symbols_are_realized(self, name, seed):
        """Each (M, i) has a self-stress with sign matrix M and a cell of dimension i."""
        entry = lookup(name)
        f = Framework(entry.graph, random_configuration(entry.graph.n, entry.d, Lcg64.seeded(seed), bound=40))
        space = self_stress_space(f)
        assume(space.dim >= 1)
        for s in fingerprint(f):
            result = realize(space, s.m.signs)
            assert result.feasible
            assert result.dim == s.i
            w = stress_at(space, result.witness)
            assert is_self_stress(f, w)
            assert SignMatrix.of(f.n, w) == s.m

    @given(
        name=st.sampled_from(["k4_d2", "k5_d2", "k5_d3", "two_block_k4"]),
        seed=st.integers(min_value=0, max_value=2**32),
    )
    @settings(max_examples=10, deadline=None)
    def test_realized_faces_are_in_the_fingerprint(self, name, seed):
        """Zeroing an entry of M gives a symbol of dimension at most i whenever it is realized."""
        entry = lookup(name)
        f = Framework(entry.graph, random_configuration(entry.graph.n, entry.d, Lcg64.seeded(seed), bound=40))
        space = self_stress_space(f)
        assume(space.dim >= 1)
        fp = fingerprint(f)
        by_signs = {s.m.signs: s.i for s in fp}
        for s in fp:
            if s.i == 0:
                continue
            for index, sign in enumerate(s.m.signs):
                if sign == 0:
                    continue
                face = s.m.signs[:index] + (0,) + s.m.signs[index + 1 :]
                result = realize(space, face)
                if result.feasible:
                    assert by_signs.get(face) == result.dim
                    assert result.dim <= s.i
                else:
                    assert face not in by_signs
        for small in fp:
            for big in fp:
                if small != big and is_face(small.m.signs, big.m.signs):
                    assert small.i < big.i

    def test_k33_on_a_circle(self):
        """The conic-forced line of K3,3 has three symbols, each realized."""
        pts = random_circle_points(6, Lcg64.seeded(2))
        f = Framework(Graph.complete_bipartite(3, 3), Configuration.from_values(2, [list(p) for p in pts]))
        space = self_stress_space(f)
        assert space.dim == 1
        fp = fingerprint(f)
        assert len(fp) == 3
        for s in fp:
            result = realize(space, s.m.signs)
            assert result.feasible and result.dim == s.i
            assert SignMatrix.of(6, stress_at(space, result.witness)) == s.m


class TestFiberEquivalence:
    """Tests for fiber equivalence."""

    def test_same_order_type(self):
        """(0, 1, 2) and (0, 1, 3) share an order type."""
        assert fiber_equivalent(k3_line(0, 1, 2), k3_line(0, 1, 3))

    def test_different_coincidence(self):
        """(0, 1, 2) and (0, 0, 1) differ."""
        assert not fiber_equivalent(k3_line(0, 1, 2), k3_line(0, 0, 1))

    def test_graphs_must_match(self, k4_framework):
        """Only frameworks on one graph are compared."""
        with pytest.raises(GraphError):
            fiber_equivalent(k4_framework, k3_line(0, 1, 2))


class TestStrataPredicates:
    """Tests for G_k membership, visibility and always-zero edges."""

    def test_gk_membership(self, k4_framework):
        """The worked K4 lies in G_1 but not G_2."""
        assert gk_stratum_member(k4_framework, 1)
        assert not gk_stratum_member(k4_framework, 2)

    def test_gk_rejects_k_zero(self, k4_framework):
        """k starts at 1."""
        with pytest.raises(InputError):
            gk_stratum_member(k4_framework, 0)

    def test_visible(self, k4_framework):
        """The worked K4 has a stress nonzero on every edge."""
        assert visible(k4_framework)

    def test_invisible_when_an_edge_is_always_zero(self):
        """K3 at (0, 0, 1) never stresses 13 or 23."""
        f = k3_line(0, 0, 1)
        assert not visible(f)
        assert always_zero_edges(self_stress_space(f)) == [(1, 3), (2, 3)]


class TestK3LineStrata:
    """Tests for the K3 order types on a line."""

    def test_thirteen_order_types(self):
        """1 + 6 + 6 order types by coincidence."""
        rows = k3_line_strata()
        assert len(rows) == 13
        assert sum(1 for r in rows if r.computed_dim == 3) == 1

    def test_distinct_types_have_a_line(self):
        """Distinct points give a one-dimensional fiber, as stated."""
        for row in k3_line_strata():
            if len(set(row.config.points)) == 3:
                assert row.computed_dim == 1
                assert row.agrees

    def test_two_coincide_disagrees_with_stated_value(self):
        """The computed dimension for two coincident points is 1, not the stated 2."""
        rows = [r for r in k3_line_strata() if len(set(r.config.points)) == 2]
        assert len(rows) == 6
        assert all(r.computed_dim == 1 and not r.agrees for r in rows)
