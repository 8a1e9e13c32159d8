#!/usr/bin/env python3
"""A composite union whose only two-node factor is NOT the doubling factor.

G1 is an edge with one looped endpoint.  G2 is a union of two looped paths,
one looped at an endpoint and one at its midpoint.  Their direct product G3
splits into two connected components with identical node and edge counts
that are nevertheless non-isomorphic; G3 is composite (G1 is a factor), yet
D2 is not a factor.  Compositeness of a union therefore does not certify
that the halves are isomorphic.
"""

from graphprod import (
    are_isomorphic,
    connected_components,
    direct_product,
    factor_search,
    induced_subgraph,
)
from graphprod.catalog import FIG3_G1, FIG3_G2
from graphprod.factorization import I2_MATRIX


def main():
    print("G1:", FIG3_G1.sorted_edges())
    print("G2:", FIG3_G2.sorted_edges())
    g3 = direct_product(FIG3_G1, FIG3_G2)
    print(f"G3 = G1 x G2: {g3.node_count} nodes, {g3.edge_count} edges")

    comps = [induced_subgraph(g3, c) for c in connected_components(g3)]
    print(f"components: {len(comps)}")
    for i, c in enumerate(comps):
        print(f"  component {i}: {c.node_count} nodes, {c.edge_count} edges")
    print("components isomorphic:", are_isomorphic(comps[0], comps[1]) is not None)
    print()

    w = factor_search(g3, 2, 6)
    print("two-node factor found:", w.factor_a.sorted_edges())
    print("  isomorphic to G1:", are_isomorphic(w.factor_a, FIG3_G1) is not None)
    d2_attempt = factor_search(g3, 2, 6, fixed_a=I2_MATRIX)
    print("doubling factor D2 exists:", d2_attempt is not None)
    print()
    print("also checking the other split, 3 x 4:")
    w34 = factor_search(g3, 3, 4)
    print("  3-node left factor exists:", w34 is not None)


if __name__ == "__main__":
    main()
