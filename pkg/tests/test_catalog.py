"""Tests for the graph catalog and claim verification."""

import pytest

from tensegrity_strata.analysis import generic_dim, sample_dims
from tensegrity_strata.catalog import (
    CATALOG,
    Provenance,
    catalog_list,
    lookup,
    prism_graph,
    prop22_scan,
    run_witness,
    scan_graphs,
    verify,
)
from tensegrity_strata.catalog.entries import PRISM_WITNESSES
from tensegrity_strata.catalog.verify import EXAMPLE_K4_SIGNS, VerifyReport
from tensegrity_strata.config import CatalogConfig
from tensegrity_strata.exceptions import InputError
from tensegrity_strata.models import Graph

WITNESS_SAMPLES = 30
VISIBILITY_THRESHOLD = 25


class TestEntries:
    """Tests for catalog contents."""

    def test_complete_graph_entries(self):
        """K_n entries carry the closed-form generic dimension."""
        assert lookup("k5_d2").expected_generic_dim == 3
        assert lookup("k8_d2").expected_generic_dim == 15
        assert lookup("k4_d3").expected_generic_dim == 0

    def test_unknown_entry(self):
        """Lookup of a missing name is an input error."""
        with pytest.raises(InputError):
            lookup("k99_d2")

    def test_provenance(self):
        """Reconstructed entries are marked as such."""
        assert lookup("prism_g61").derived
        assert lookup("two_block_k4").provenance is Provenance.DERIVED
        assert not lookup("example_k4").derived

    def test_list_matches_catalog(self):
        """catalog_list returns every entry once."""
        assert [e.name for e in catalog_list()] == list(CATALOG)

    def test_prism_graph(self):
        """The prism has two triangles and three rungs."""
        g = prism_graph((1, 4, 5))
        assert g.edge_count == 9
        assert all(g.has_edge(*e) for e in [(1, 2), (3, 4), (5, 6), (1, 4), (4, 5), (2, 3), (3, 6)])

    def test_prism_graph_rejects_bad_triangle(self):
        """A triangle must take one endpoint of every rung."""
        with pytest.raises(InputError):
            prism_graph((1, 2, 3))


class TestVerify:
    """Tests for claim verification."""

    def test_example_k4(self):
        """The worked K4 passes every claim, signs included."""
        report = verify(lookup("example_k4"))
        assert report.status == "PASS"
        assert any(c.claim == "sign matrix matches" and c.passed for c in report.claims)
        assert EXAMPLE_K4_SIGNS[0] == (0, 1, -1, 1)

    @pytest.mark.parametrize("name", ["k4_d2", "k5_d2", "k6_d3", "k3_d1"])
    def test_complete_graphs(self, name):
        """Sampled generic dims match the closed form."""
        assert verify(lookup(name)).passed

    @pytest.mark.slow
    def test_k33_conic(self):
        """Six points on a conic stress K3,3 with every edge nonzero."""
        config = CatalogConfig()
        assert (config.witness_samples, config.visibility_threshold) == (WITNESS_SAMPLES, VISIBILITY_THRESHOLD)
        report = verify(lookup("k33_conic"), config=config)
        assert report.status == "PASS"

    @pytest.mark.slow
    def test_k33_conic_witness_run(self):
        """Thirty conic configurations all carry a stress; at least 25 are visible."""
        entry = lookup("k33_conic")
        run = run_witness(entry.graph, entry.witnesses[0], seed=1, samples=WITNESS_SAMPLES)
        assert len(run.dims) == WITNESS_SAMPLES
        assert run.skipped == 0
        assert run.forced
        assert set(run.dims) == {1}
        assert run.visible_count >= VISIBILITY_THRESHOLD

    def test_k33_generic_dim_is_zero(self):
        """Ten random placements of K3,3 carry no self-stress."""
        dims = sample_dims(Graph.complete_bipartite(3, 3), 2, samples=10, seed=1)
        assert dims == [0] * 10
        assert generic_dim(Graph.complete_bipartite(3, 3), 2, samples=10, seed=1) == 0

    def test_two_block(self):
        """The bridge edge is always zero and does not change the generic dim."""
        report = verify(lookup("two_block_k4"))
        assert report.passed

    def test_failed_derived_entry_is_unverified(self):
        """A failing reconstruction reports RECONSTRUCTION UNVERIFIED, not FAIL."""
        report = VerifyReport(lookup("prism_g61"))
        report.add("made up", False)
        assert report.status == "RECONSTRUCTION UNVERIFIED"
        report = VerifyReport(lookup("k4_d2"))
        report.add("made up", False)
        assert report.status == "FAIL"

    @pytest.mark.slow
    def test_prism_collinear_witnesses_are_invisible(self):
        """A collinear triangle stresses only that triangle."""
        graph = prism_graph((1, 4, 5))
        collinear = [c for c in PRISM_WITNESSES if not c.expect_visible]
        assert len(collinear) == 2
        for claim in collinear:
            run = run_witness(graph, claim, seed=1, samples=WITNESS_SAMPLES)
            assert len(run.dims) == WITNESS_SAMPLES
            assert run.forced
            assert run.visible_count == 0

    @pytest.mark.slow
    def test_prism_concurrency_is_visible(self):
        """Concurrent rungs stress every edge of the prism."""
        run = run_witness(prism_graph((1, 4, 5)), PRISM_WITNESSES[0], seed=1, samples=WITNESS_SAMPLES)
        assert len(run.dims) == WITNESS_SAMPLES
        assert run.forced
        assert run.visible_count >= VISIBILITY_THRESHOLD


class TestScan:
    """Tests for the k - 2n + 3 scan."""

    def test_predictions(self):
        """Qualifying graphs match the prediction."""
        rows = {r.name: r for r in prop22_scan()}
        assert rows["K4"].predicted == 1
        assert rows["K5"].predicted == 3
        assert rows["K3,3"].predicted == 0
        assert rows["K5-e"].predicted == 2
        assert rows["K6-3K2"].predicted == 3
        assert rows["K3,4"].predicted == 1
        assert rows["prism"].predicted == 0
        assert all(r.status == "pass" for r in rows.values())

    def test_skips_low_connectivity(self):
        """A 4-cycle has edge connectivity 2 and is skipped."""
        rows = prop22_scan([("C4", Graph.cycle(4))])
        assert rows[0].status == "skipped"
        assert rows[0].generic is None

    def test_scan_graph_names(self):
        """The default scan covers seven graphs."""
        assert len(scan_graphs()) == 7
