"""Graph products, direct-product primality testing, and isomorphism reductions.

Everything operates on finite undirected graphs with self-loops allowed.
See :mod:`graphprod.core` for the counting conventions (a self-loop is one
edge and one diagonal 1, so adjacency matrices carry 2m - s nonzeros).
"""

from .core import (
    EdgeListParseError,
    Graph,
    GraphProdError,
    PreconditionError,
    SizeLimitError,
    adjacency_matrix,
    bipartition,
    connected_components,
    disjoint_union,
    format_edge_list,
    graph_from_adjacency,
    induced_subgraph,
    is_bipartite,
    is_connected,
    parse_edge_list,
    read_edge_list,
    relabel,
    write_edge_list,
)
from .factorization import (
    D2,
    FactorizationWitness,
    elimination_oracle,
    factor_search,
    factorization_from_isomorphism,
    find_factorization,
    is_prime_direct,
    isomorphism_from_union_factorization,
    search_oracle,
    two_block_survivors,
    union_compositeness_by_elimination,
    witness_is_valid,
    witness_to_json,
)
from .isomorphism import IsomorphismWitness, are_isomorphic, is_isomorphism
from .products import (
    ProductKind,
    cartesian_product,
    direct_product,
    kronecker,
    lexicographic_product,
    pair_index,
    product,
    strong_product,
    verify_kronecker_identity,
)
from .reduction import (
    ClassGReport,
    PaddingResult,
    class_g_check,
    class_g_isomorphism,
    div2div3_offset,
    graph_isomorphism_via_compositeness,
    pad_to_class_g,
    padding_result_to_json,
    prime_in_bertrand_range,
)

__version__ = "0.1.0"

__all__ = [
    "ClassGReport",
    "D2",
    "EdgeListParseError",
    "FactorizationWitness",
    "Graph",
    "GraphProdError",
    "IsomorphismWitness",
    "PaddingResult",
    "PreconditionError",
    "ProductKind",
    "SizeLimitError",
    "adjacency_matrix",
    "are_isomorphic",
    "bipartition",
    "cartesian_product",
    "class_g_check",
    "class_g_isomorphism",
    "connected_components",
    "direct_product",
    "disjoint_union",
    "div2div3_offset",
    "elimination_oracle",
    "factor_search",
    "factorization_from_isomorphism",
    "find_factorization",
    "format_edge_list",
    "graph_from_adjacency",
    "graph_isomorphism_via_compositeness",
    "induced_subgraph",
    "is_bipartite",
    "is_connected",
    "is_isomorphism",
    "is_prime_direct",
    "isomorphism_from_union_factorization",
    "kronecker",
    "lexicographic_product",
    "pad_to_class_g",
    "padding_result_to_json",
    "pair_index",
    "parse_edge_list",
    "prime_in_bertrand_range",
    "product",
    "read_edge_list",
    "relabel",
    "search_oracle",
    "strong_product",
    "two_block_survivors",
    "union_compositeness_by_elimination",
    "verify_kronecker_identity",
    "witness_is_valid",
    "witness_to_json",
    "write_edge_list",
]
