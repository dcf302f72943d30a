"""Catalog of named graphs and the verification of their claims."""

from .entries import CATALOG, CatalogEntry, Provenance, WitnessClaim, catalog_list, lookup, prism_graph
from .verify import (
    ClaimResult,
    ScanRow,
    VerifyReport,
    prism_labeling_search,
    prop22_scan,
    run_witness,
    scan_graphs,
    verify,
)

__all__ = [
    "CATALOG",
    "CatalogEntry",
    "Provenance",
    "WitnessClaim",
    "catalog_list",
    "lookup",
    "prism_graph",
    "ClaimResult",
    "VerifyReport",
    "verify",
    "run_witness",
    "prism_labeling_search",
    "ScanRow",
    "scan_graphs",
    "prop22_scan",
]
