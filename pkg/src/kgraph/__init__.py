"""Uniform hypergraph constructions, codegree analytics and containment search."""

from kgraph.constructions import make_fp, make_g, make_host, make_zycle, reduce_host_params
from kgraph.errors import InputError, ParameterError, ParseError, SizeError
from kgraph.extremal import ExCoQuery, density_profile, ex_co_exact, exists_free_with_min_codegree
from kgraph.hypergraph import (
    CodegreeReport,
    Hypergraph,
    blow_up,
    codegree,
    common_neighborhood,
    count_labeled_embeddings,
    induced_subgraph,
    min_codegree_report,
    neighborhood,
    remove_vertices,
)
from kgraph.io import emit_edge_list, parse_edge_list
from kgraph.search import SearchBudget, Status, find_embedding, find_homomorphism, zycle_in_fp_by_labels

__all__ = [
    "CodegreeReport",
    "ExCoQuery",
    "Hypergraph",
    "InputError",
    "ParameterError",
    "ParseError",
    "SearchBudget",
    "SizeError",
    "Status",
    "blow_up",
    "codegree",
    "common_neighborhood",
    "count_labeled_embeddings",
    "density_profile",
    "emit_edge_list",
    "ex_co_exact",
    "exists_free_with_min_codegree",
    "find_embedding",
    "find_homomorphism",
    "induced_subgraph",
    "make_fp",
    "make_g",
    "make_host",
    "make_zycle",
    "min_codegree_report",
    "neighborhood",
    "parse_edge_list",
    "reduce_host_params",
    "remove_vertices",
    "zycle_in_fp_by_labels",
]
