"""Multigraded Betti numbers of edge ideals and their combinatorial certificates."""

from .certificates import (
    CompleteBipartiteSubgraph,
    StronglyDisjointFamily,
    block_bipartitions,
    d_invariant,
    extract_certificate,
    family_exists,
    induced_matching_number,
    is_3_disjoint,
    verify_equivalence,
    verify_family,
)
from .chordality import copair_edges, is_two_pair, is_weakly_chordal, nv_bipartition, two_pair_oracle
from .graph import (
    Graph,
    VertexSubset,
    big_height,
    builtin,
    complement,
    delete_edge,
    delete_vertices,
    from_edge_list,
    induced,
    katzman_graph,
)
from .graphio import format_edge_list, parse_edge_list, parse_graph6, to_graph6
from .hochster import BettiTable, betti_entry, betti_table, char_compare, les_dim_check, pdim_reg
from .homology import GF2, GF3, QQ, FieldSpec, exact_rank, independence_complex, reduced_homology_dims

__version__ = "0.1.0"
