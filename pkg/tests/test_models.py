"""Tests for tensegrity-strata models."""

from fractions import Fraction

import pytest

from tensegrity_strata.exceptions import DimensionError, GraphError
from tensegrity_strata.models import (
    Configuration,
    Fingerprint,
    Framework,
    Graph,
    SignMatrix,
    Stress,
    StratumSymbol,
    normalize_edge,
)


class TestGraph:
    """Tests for the Graph model."""

    def test_normalize_edge_orders_endpoints(self):
        """Edges are stored as (min, max)."""
        assert normalize_edge(3, 1) == (1, 3)

    def test_loop_rejected(self):
        """A loop is not an edge."""
        with pytest.raises(GraphError):
            normalize_edge(2, 2)

    def test_repeated_edge_rejected(self):
        """from_edges refuses an edge listed twice, in either orientation."""
        with pytest.raises(GraphError):
            Graph.from_edges(3, [(1, 2), (2, 1)])

    def test_vertex_out_of_range(self):
        """Edges must stay inside 1..n."""
        with pytest.raises(GraphError):
            Graph.from_edges(3, [(1, 4)])

    def test_edge_order_is_lexicographic(self):
        """K4 edges come out as 12, 13, 14, 23, 24, 34."""
        assert Graph.complete(4).edge_order == ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))

    def test_complete_bipartite(self):
        """K3,3 has 9 edges, none inside a part."""
        g = Graph.complete_bipartite(3, 3)
        assert g.edge_count == 9
        assert not g.has_edge(1, 2)
        assert g.has_edge(1, 4)

    def test_delete_missing_edge(self):
        """Deleting an absent edge is an error."""
        with pytest.raises(GraphError):
            Graph.cycle(4).delete_edge(1, 3)

    def test_without_vertices_keeps_labels(self):
        """Dropped vertices stay as isolated labels."""
        g = Graph.complete(4).without_vertices([1])
        assert g.n == 4
        assert g.degree(1) == 0
        assert g.edge_count == 3

    def test_induced_subgraph_reindexes(self):
        """The induced subgraph is relabelled 1..k with a map back."""
        sub, back = Graph.complete(5).induced_subgraph([2, 4, 5])
        assert sub == Graph.complete(3)
        assert back == {1: 2, 2: 4, 3: 5}

    def test_to_networkx(self):
        """The networkx view has the same vertices and edges."""
        nxg = Graph.cycle(5).to_networkx()
        assert sorted(nxg.nodes) == [1, 2, 3, 4, 5]
        assert nxg.number_of_edges() == 5


class TestConfiguration:
    """Tests for configurations and frameworks."""

    def test_coordinate_count_checked(self):
        """Every point has d coordinates."""
        with pytest.raises(DimensionError):
            Configuration.from_values(2, [[0, 0], [1]])

    def test_framework_sizes_must_match(self):
        """The graph and configuration agree on n."""
        with pytest.raises(DimensionError):
            Framework(Graph.complete(3), Configuration.from_values(1, [[0], [1]]))

    def test_replace_point(self):
        """replace returns a new configuration with one point moved."""
        c = Configuration.from_values(1, [[0], [1]])
        assert c.replace(2, [5]).point(2) == (Fraction(5),)
        assert c.point(2) == (Fraction(1),)


class TestStress:
    """Tests for stresses."""

    def test_from_mapping_fills_zeros(self):
        """Unlisted edges carry tension 0."""
        g = Graph.complete(3)
        w = Stress.from_mapping(g, {(2, 1): 3})
        assert w.values == (Fraction(3), Fraction(0), Fraction(0))
        assert w.support == frozenset({(1, 2)})

    def test_from_mapping_unknown_edge(self):
        """Tensions on non-edges are rejected."""
        with pytest.raises(GraphError):
            Stress.from_mapping(Graph.cycle(4), {(1, 3): 1})

    def test_restrict_drops_only_zero_edges(self):
        """restrict_to refuses to drop an edge with tension."""
        g = Graph.complete(3)
        w = Stress.from_mapping(g, {(1, 2): 1})
        with pytest.raises(GraphError):
            w.restrict_to(g.delete_edge(1, 2))
        assert w.restrict_to(g.delete_edge(2, 3)).tension(1, 2) == 1

    def test_normalized(self):
        """The first nonzero tension becomes 1."""
        g = Graph.complete(3)
        w = Stress.from_vector(g, [0, -2, 4]).normalized()
        assert w.values == (Fraction(0), Fraction(1), Fraction(-2))


class TestSignMatrix:
    """Tests for strut-cable matrices."""

    def test_entries_symmetric(self, k4_stress):
        """M is symmetric with a zero diagonal."""
        m = SignMatrix.of(4, k4_stress)
        rows = m.as_rows()
        assert all(rows[i][i] == 0 for i in range(4))
        assert all(rows[i][j] == rows[j][i] for i in range(4) for j in range(4))

    def test_negation(self, k4_stress):
        """-M swaps struts and cables."""
        m = SignMatrix.of(4, k4_stress)
        assert m.pattern() == "+-++-+"
        assert (-m).pattern() == "-+--+-"

    def test_invalid_sign(self):
        """Signs are -1, 0 or 1."""
        with pytest.raises(ValueError):
            SignMatrix(2, ((1, 2),), (2,))


class TestFingerprint:
    """Tests for stratum fingerprints."""

    def test_canonical_is_order_independent(self):
        """The canonical text does not depend on insertion order."""
        g = Graph.complete(3)
        a = StratumSymbol(SignMatrix(3, g.edge_order, (1, 0, 0)), 1)
        b = StratumSymbol(SignMatrix(3, g.edge_order, (-1, 0, 0)), 1)
        z = StratumSymbol(SignMatrix.zero(g), 0)
        assert Fingerprint.of([a, b, z]).canonical() == Fingerprint.of([z, b, a]).canonical()
        assert Fingerprint.of([a, z]).digest() != Fingerprint.of([b, z]).digest()

    def test_mixed_graphs_rejected(self):
        """A fingerprint belongs to one graph."""
        s3 = StratumSymbol(SignMatrix.zero(Graph.complete(3)), 0)
        s4 = StratumSymbol(SignMatrix.zero(Graph.complete(4)), 0)
        with pytest.raises(DimensionError):
            Fingerprint.of([s3, s4])

    def test_dimension_of(self):
        """dimension_of looks up the cell dimension of a sign matrix."""
        g = Graph.complete(3)
        m = SignMatrix(3, g.edge_order, (1, 0, 0))
        fp = Fingerprint.of([StratumSymbol(m, 1)])
        assert fp.dimension_of(m) == 1
        assert fp.dimension_of(-m) is None
