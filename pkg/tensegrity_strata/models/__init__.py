"""Data models for tensegrity-strata."""

from .framework import Configuration, Framework, SelfStressSpace, SignMatrix, Stress, Tensegrity
from .graph import Edge, Graph, normalize_edge
from .stratum import Fingerprint, StratumSymbol

__all__ = [
    "Edge",
    "Graph",
    "normalize_edge",
    "Configuration",
    "Framework",
    "Stress",
    "Tensegrity",
    "SignMatrix",
    "SelfStressSpace",
    "StratumSymbol",
    "Fingerprint",
]
