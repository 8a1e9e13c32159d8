"""Shared test utilities: independent naive oracles and graph generators.

The oracles here deliberately re-derive everything from first definitions
(permutation search, all-pairs membership tests, full factor enumeration) so
the library implementations are checked against a second route.
"""

from __future__ import annotations

import random
from itertools import permutations

from graphprod import Graph, are_isomorphic, direct_product, disjoint_union, relabel
from graphprod.reduction import class_g_check

# -- enumeration --------------------------------------------------------------


def all_graphs(n: int):
    """Every labeled graph on n nodes, self-loops included."""
    cells = [(i, j) for i in range(n) for j in range(i, n)]
    for mask in range(1 << len(cells)):
        edges = {cells[k] for k in range(len(cells)) if mask >> k & 1}
        yield Graph(n, frozenset(edges))


def all_connected_graphs(n: int):
    from graphprod import is_connected

    for g in all_graphs(n):
        if is_connected(g):
            yield g


# -- random generators (always seeded by the caller) --------------------------


def random_graph(n: int, rng: random.Random, edge_p: float = 0.4, loop_p: float = 0.25) -> Graph:
    edges = set()
    for i in range(n):
        if rng.random() < loop_p:
            edges.add((i, i))
        for j in range(i + 1, n):
            if rng.random() < edge_p:
                edges.add((i, j))
    return Graph(n, frozenset(edges))


def random_connected_graph(
    n: int, rng: random.Random, extra_p: float = 0.3, loop_p: float = 0.2
) -> Graph:
    """Random spanning tree plus extra edges; loops optional."""
    edges = set()
    for v in range(1, n):
        u = rng.randrange(v)
        edges.add((u, v))
    for i in range(n):
        if rng.random() < loop_p:
            edges.add((i, i))
        for j in range(i + 1, n):
            if rng.random() < extra_p:
                edges.add((i, j))
    return Graph(n, frozenset(edges))


def random_permutation(n: int, rng: random.Random) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


def random_relabeling(g: Graph, rng: random.Random) -> Graph:
    return relabel(g, random_permutation(g.node_count, rng))


def random_bipartite_connected(n: int, rng: random.Random, extra_p: float = 0.3) -> Graph:
    """Connected loop-free bipartite graph: tree plus parity-respecting extras."""
    parent = [0] * n
    edges = set()
    for v in range(1, n):
        parent[v] = rng.randrange(v)
        edges.add((parent[v], v))
    depth = [0] * n
    for v in range(1, n):
        depth[v] = depth[parent[v]] + 1
    for i in range(n):
        for j in range(i + 1, n):
            if (depth[i] + depth[j]) % 2 == 1 and rng.random() < extra_p:
                edges.add((i, j))
    return Graph(n, frozenset(edges))


def random_class_g_graph(n: int, rng: random.Random) -> Graph:
    """Rejection-sample a class G member of the given (prime) order."""
    while True:
        g = random_connected_graph(n, rng, extra_p=rng.uniform(0.1, 0.6), loop_p=rng.uniform(0.1, 0.6))
        if class_g_check(g).member:
            return g


def nonisomorphic_pair_same_counts(
    n: int, rng: random.Random, max_tries: int = 2000
) -> tuple[Graph, Graph]:
    """Connected pair with equal node and edge counts that is not isomorphic."""
    for _ in range(max_tries):
        g1 = random_connected_graph(n, rng)
        g2 = random_connected_graph(n, rng)
        if g1.edge_count != g2.edge_count:
            continue
        if are_isomorphic(g1, g2, node_limit=None) is None:
            return g1, g2
    raise AssertionError("could not sample a non-isomorphic same-count pair")


# -- naive oracles -------------------------------------------------------------


def naive_isomorphic(g1: Graph, g2: Graph) -> tuple[int, ...] | None:
    """Unpruned permutation search, first witness in lexicographic order."""
    if g1.node_count != g2.node_count:
        return None
    for perm in permutations(range(g1.node_count)):
        if relabel(g1, perm).edges == g2.edges:
            return perm
    return None


def naive_product_edges(kind: str, g1: Graph, g2: Graph) -> frozenset:
    """All-pairs membership test straight from the product definitions."""
    n1, n2 = g1.node_count, g2.node_count
    order = n1 * n2
    edges = set()
    for p in range(order):
        x, y = divmod(p, n2)
        for q in range(p, order):
            xp, yp = divmod(q, n2)
            e1 = g1.has_edge(x, xp)
            e2 = g2.has_edge(y, yp)
            if kind == "cartesian":
                keep = (x == xp and e2) or (e1 and y == yp)
            elif kind == "direct":
                keep = e1 and e2
            elif kind == "strong":
                keep = (x == xp and e2) or (e1 and y == yp) or (e1 and e2)
            elif kind == "lexicographic":
                keep = e1 or (x == xp and e2)
            else:
                raise ValueError(kind)
            if keep:
                edges.add((p, q))
    return frozenset(edges)


def naive_factor_exists(g: Graph, a: int, b: int) -> bool:
    """Enumerate every factor pair (A, B) and test direct(A, B) ~ g."""
    nz = g.nonzero_count
    loops = g.loop_count
    for fa in all_graphs(a):
        for fb in all_graphs(b):
            if fa.nonzero_count * fb.nonzero_count != nz:
                continue
            if fa.loop_count * fb.loop_count != loops:
                continue
            prod = direct_product(fa, fb, node_limit=None)
            if are_isomorphic(prod, g, node_limit=None) is not None:
                return True
    return False


def components_as_graphs(g: Graph) -> list[Graph]:
    from graphprod import connected_components, induced_subgraph

    return [induced_subgraph(g, comp) for comp in connected_components(g)]
