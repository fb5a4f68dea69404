"""Iterated local transitivity (ILTH) hypergraphs: generation, distances,
motif census, clustering coefficients, random baselines and embeddings."""

from .hypergraph import (Graph, Hypergraph, HypergraphError, Lineage, ResourceLimitError,
                         ilt_prime_step, ilth2_iterate, ilth2_step, ilth_iterate, ilth_step,
                         project_to_initial, two_section, validate)
from .io import FormatError, format_hgf, parse_edge_list, parse_hgf, read_hgf, write_hgf

__all__ = [
    "FormatError",
    "Graph",
    "Hypergraph",
    "HypergraphError",
    "Lineage",
    "ResourceLimitError",
    "format_hgf",
    "ilt_prime_step",
    "ilth2_iterate",
    "ilth2_step",
    "ilth_iterate",
    "ilth_step",
    "parse_edge_list",
    "parse_hgf",
    "project_to_initial",
    "read_hgf",
    "two_section",
    "validate",
    "write_hgf",
]
