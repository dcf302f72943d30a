"""Tests for generic dimensions and the tensegrity characteristic."""

from fractions import Fraction

import pytest

from tensegrity_strata.analysis import (
    bound_check,
    edge_addition_check,
    edge_deletion_check,
    generic_dim,
    induced_k4_bound,
    is_self_stress,
    sample_dims,
    tau_complete,
    tau_report,
)
from tensegrity_strata.analysis.characteristic import witness_configuration
from tensegrity_strata.analysis.connectivity import random_connected_graph
from tensegrity_strata.catalog import lookup, prism_graph
from tensegrity_strata.exceptions import InputError, PreconditionError
from tensegrity_strata.geometry import ProjPoint, evaluate_system
from tensegrity_strata.geometry.library import CONIC_123456, CONCURRENT_12_34_56
from tensegrity_strata.models import Configuration, Framework, Graph
from tensegrity_strata.sampling import Lcg64


class TestGenericDim:
    """Tests for sampled generic dimensions."""

    @pytest.mark.parametrize(
        "graph,d,expected",
        [
            (Graph.complete(4), 2, 1),
            (Graph.complete(5), 2, 3),
            (Graph.complete_bipartite(3, 3), 2, 0),
            (Graph.complete(5), 3, 1),
            (Graph.complete(6), 2, 6),
        ],
    )
    def test_known_graphs(self, graph, d, expected):
        """Generic fiber dimensions of small graphs."""
        assert generic_dim(graph, d) == expected

    def test_samples_are_reproducible(self):
        """The same seed gives the same sample dims."""
        g = Graph.complete(5)
        assert sample_dims(g, 2, 4, seed=11) == sample_dims(g, 2, 4, seed=11)

    def test_needs_one_sample(self):
        """Zero samples is an input error."""
        with pytest.raises(InputError):
            sample_dims(Graph.complete(4), 2, samples=0)


class TestTauComplete:
    """Tests for the complete-graph closed form."""

    @pytest.mark.parametrize("n,d,expected", [(4, 2, 1), (8, 2, 15), (5, 3, 1), (3, 1, 1)])
    def test_values(self, n, d, expected):
        """(n-d-1)(n-d)/2."""
        assert tau_complete(n, d) == expected

    def test_too_few_vertices(self):
        """The formula needs n >= d+2."""
        with pytest.raises(InputError):
            tau_complete(3, 2)


class TestTauReport:
    """Tests for the characteristic report."""

    def test_positive(self):
        """K5 in the plane has tau = 3."""
        report = tau_report(Graph.complete(5), 2)
        assert report.tau == 3
        assert report.verdict() == "tau = 3"

    def test_k33_conic_witness(self):
        """K3,3 is generically unstressed, but six points on a conic force a stress."""
        report = tau_report(Graph.complete_bipartite(3, 3), 2)
        assert report.generic_dim == 0
        assert report.witness is not None
        assert report.witness.kind == "conic"
        assert report.tau == 0
        assert report.verdict() == "tau ≤ 0; witness: conic → tau = 0"

    def test_prism_concurrency_witness(self):
        """The prism is stressed when its three rungs are concurrent."""
        report = tau_report(prism_graph((1, 4, 5)), 2)
        assert report.witness is not None
        assert report.witness.kind == "concurrency"

    def test_no_witness_outside_the_plane(self):
        """Witnesses are searched in the plane only."""
        report = tau_report(Graph.complete(4), 3)
        assert report.witness is None
        assert report.tau is None
        assert report.verdict() == "tau ≤ 0"

    def test_empty_graph(self):
        """A graph without edges has no characteristic to report."""
        with pytest.raises(InputError):
            tau_report(Graph(3, frozenset()), 2)


class TestWitnessConfiguration:
    """Tests for witness configurations."""

    def test_conic_points_lie_on_a_conic(self, rng):
        """Sampled K3,3 witnesses satisfy the Pascal system."""
        config = witness_configuration(CONIC_123456, 6, rng)
        base = [ProjPoint(*p) for p in config.points]
        assert evaluate_system(CONIC_123456, base).satisfied

    def test_extra_vertices_are_free(self, rng):
        """Vertices beyond the base points are filled in at random."""
        config = witness_configuration(CONCURRENT_12_34_56, 8, rng)
        assert config.n == 8

    def test_too_small_graph(self, rng):
        """A system cannot use more points than the graph has."""
        with pytest.raises(InputError):
            witness_configuration(CONIC_123456, 4, rng)


class TestLaws:
    """Tests for the edge laws and bounds."""

    def test_bound_predictions(self):
        """k - 2n + 3 for planar graphs that qualify."""
        assert bound_check(Graph.complete_bipartite(3, 3), 2).prediction == 0
        assert bound_check(Graph.complete(5), 2).prediction == 3
        assert bound_check(Graph.complete(4), 2).prediction == 1

    def test_bound_skips_large_and_spatial(self):
        """No prediction outside the plane or beyond 7 vertices."""
        assert bound_check(Graph.complete(8), 2).prediction is None
        assert bound_check(Graph.complete(5), 3).prediction is None
        assert bound_check(Graph.complete(5), 3).lower_bound == 1

    def test_edge_deletion_drops_by_at_most_one(self):
        """Deleting any edge of K5 lowers the generic dim by exactly 1."""
        drops = edge_deletion_check(Graph.complete(5), 2)
        assert len(drops) == 10
        assert all(d.drop == 1 for d in drops)

    def test_two_block_bridge_never_stressed(self):
        """The bridge between two K4 blocks carries no tension: its drop is 0."""
        drops = {d.edge: d.drop for d in edge_deletion_check(lookup("two_block_k4").graph, 2)}
        assert drops[(4, 5)] == 0
        assert all(drop == 1 for e, drop in drops.items() if e != (4, 5))

    def test_edge_deletion_needs_two(self):
        """The law is stated for generic dim at least 2."""
        with pytest.raises(PreconditionError) as exc:
            edge_deletion_check(Graph.complete(4), 2)
        assert exc.value.name == "generic dim >= 2"

    def test_edge_addition(self):
        """K4 with a 2-valent vertex is critical; one more edge adds one stress."""
        g = Graph(5, Graph.complete(4).edges).with_edges([(1, 5), (2, 5)])
        check = edge_addition_check(g, 2, [(3, 5)])
        assert (check.before, check.after) == (1, 2)
        assert check.holds

    def test_edge_addition_needs_critical_count(self):
        """A pendant vertex leaves the graph below the critical count."""
        g = Graph(5, Graph.complete(4).edges).with_edges([(1, 5)])
        with pytest.raises(PreconditionError):
            edge_addition_check(g, 2, [(2, 5)])

    def test_induced_k4_bound(self, k4_framework):
        """An induced K4 in general position gives a self-stress of G."""
        w = induced_k4_bound(k4_framework)
        assert w is not None
        assert is_self_stress(k4_framework, w)

    def test_induced_k4_bound_without_k4(self):
        """Graphs without an induced K4 give nothing."""
        f = Framework(Graph.cycle(4), Configuration.from_values(2, [[0, 0], [1, 0], [1, 1], [0, 1]]))
        assert induced_k4_bound(f) is None


class TestSweeps:
    """Closed form and edge law over many graphs and seeds."""

    @pytest.mark.parametrize("d", [1, 2, 3])
    @pytest.mark.parametrize("seed", range(1, 6))
    def test_complete_graphs_match_closed_form(self, d, seed):
        """Sampled generic dims of K_n equal (n-d-1)(n-d)/2 for n up to 8."""
        for n in range(d + 2, 9):
            assert generic_dim(Graph.complete(n), d, seed=seed) == tau_complete(n, d)

    def test_random_graphs_drop_at_most_one(self):
        """Deleting one edge lowers the generic dim by 0 or 1."""
        rng = Lcg64.seeded(2024)
        checked = 0
        while checked < 30:
            g = random_connected_graph(5 + rng.randint(0, 2), Fraction(3, 4), rng)
            if generic_dim(g, 2) < 2:
                continue
            assert all(drop.drop in (0, 1) for drop in edge_deletion_check(g, 2))
            checked += 1
