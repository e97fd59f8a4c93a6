"""Wiener index toolkit: bitset graphs, named families, isomorph-free enumeration
and exhaustive extremal searches."""

from __future__ import annotations

from .blocks import BlockCutTree, block_cut_tree, cut_vertices
from .canon import (
    CanonicalCode,
    are_isomorphic,
    automorphism_orbits,
    canonical_code,
    graph_canonical_form,
    tree_canonical_code,
)
from .enumeration import (
    FamilyFilter,
    enumerate_by_blocks,
    enumerate_connected_graphs,
    enumerate_trees,
    graph6_stream,
)
from .errors import WienerKitError
from .extremal import (
    SearchReport,
    diametral_path_cover_check,
    edge_minimal_classes,
    improve_tree,
    is_edge_minimal,
    is_reducible_to_tree,
    layered_decomposition,
    max_wiener_search,
    merge_reports,
    search,
    verify_djw,
)
from .families import FamilySpec, build, closed_form_wiener, parse_spec, spec
from .graph import Graph, merge_at_vertex
from .graph6 import decode, encode, read_graph6, write_graph6
from .metrics import center_median, diameter, distances, wiener_batch, wiener_index

__version__ = "0.1.0"

__all__ = [
    "BlockCutTree", "CanonicalCode", "FamilyFilter", "FamilySpec", "Graph", "SearchReport",
    "WienerKitError", "are_isomorphic", "automorphism_orbits", "block_cut_tree", "build",
    "canonical_code", "center_median", "closed_form_wiener", "cut_vertices", "decode",
    "diameter", "diametral_path_cover_check", "distances", "edge_minimal_classes", "encode",
    "enumerate_by_blocks", "enumerate_connected_graphs", "enumerate_trees", "graph6_stream",
    "graph_canonical_form", "improve_tree", "is_edge_minimal", "is_reducible_to_tree",
    "layered_decomposition", "max_wiener_search", "merge_at_vertex", "merge_reports",
    "parse_spec", "read_graph6", "search", "spec", "tree_canonical_code", "verify_djw",
    "wiener_batch", "wiener_index", "write_graph6",
]
