#!/usr/bin/env python3
"""Tour of the four graph products and the Kronecker identity.

Builds small factor graphs, prints each product, and shows that under
row-major pair indexing the adjacency matrix of the direct product is
literally the Kronecker product of the factor matrices.
"""

import numpy as np

from graphprod import (
    ProductKind,
    adjacency_matrix,
    kronecker,
    product,
    verify_kronecker_identity,
)
from graphprod.catalog import C5, D2, K2, L1, P3, add_loops


def show(title, g):
    print(f"{title}: {g.node_count} nodes, edges {g.sorted_edges()}")


def main():
    g1 = add_loops(K2, [0])  # an edge plus one loop
    g2 = P3
    show("G1", g1)
    show("G2", g2)
    print()

    for kind in ProductKind:
        p = product(kind, g1, g2)
        show(f"{kind.value:13s}", p)
    print()

    print("Direct product adjacency vs Kronecker product of adjacencies:")
    lhs = adjacency_matrix(product(ProductKind.DIRECT, g1, g2))
    rhs = kronecker(adjacency_matrix(g1), adjacency_matrix(g2))
    print(lhs)
    print("equal entrywise:", np.array_equal(lhs, rhs))
    print("identity holds for (K2, C5):", verify_kronecker_identity(K2, C5))
    print()

    print("Special factors:")
    show("L1 x C5 (identity)", product(ProductKind.DIRECT, L1, C5))
    show("D2 x K2 (doubling)", product(ProductKind.DIRECT, D2, K2))


if __name__ == "__main__":
    main()
