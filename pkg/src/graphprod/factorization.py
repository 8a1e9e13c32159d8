"""Direct-product factor search, primality testing, and union factorizations.

The factor search answers: can graph g be relabelled so that its adjacency
matrix becomes A (x) B for some graphs A (order a) and B (order b)?  The
left order a never exceeds the square root of the node count, so all
symmetric 0/1 candidates for A are enumerated outright (8 of them for
a = 2) and cheap counting filters discard most before any search runs:
nnz(A) must divide nnz(g), loop counts must factor likewise, a zero row of
A forces isolated vertices g may not have, and a bipartite A cannot produce
a nonbipartite g.

For each surviving A the engine backtracks over assignments of (row, col)
labels to g's vertices.  Cells of B are tri-state (unknown / 0 / 1),
committed lazily as placements force them and recorded on a trail so
backtracking restores state exactly.  Two further prunings keep exhaustive
searches on ~20-node graphs inside desk scale: a vertex may only sit in row
r if its adjacency row sum is divisible by A's row-r sum (row sums multiply
in a Kronecker product), and untouched columns of B are interchangeable, so
column candidates are the already-used ones plus the first fresh column.
Vertices are placed component by component in breadth-first order.

Searches are deterministic: identical inputs explore candidates in the same
order and return identical witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .core import (
    Graph,
    PreconditionError,
    SizeLimitError,
    connected_components,
    disjoint_union,
    induced_subgraph,
    is_bipartite,
    is_connected,
    relabel,
)
from .isomorphism import IsomorphismWitness, are_isomorphic, is_isomorphism
from .products import direct_product
from .reduction import class_g_check

DEFAULT_NODE_LIMIT = 20

D2 = Graph(2, frozenset({(0, 0), (1, 1)}))
I2_MATRIX = ((1, 0), (0, 1))


@dataclass(frozen=True)
class FactorizationWitness:
    """Factor pair plus the vertex labeling proving g = direct(factor_a, factor_b).

    ``labeling[v] == (r, c)`` places vertex v of the factored graph at row r
    of factor_a and column c of factor_b, i.e. at product index ``r * b + c``.
    """

    factor_a: Graph
    factor_b: Graph
    labeling: tuple[tuple[int, int], ...]


def witness_is_valid(g: Graph, w: FactorizationWitness) -> bool:
    """Recompute direct(factor_a, factor_b) and compare against relabelled g."""
    a = w.factor_a.node_count
    b = w.factor_b.node_count
    if a < 2 or b < 2 or a * b != g.node_count or len(w.labeling) != g.node_count:
        return False
    mapping = [r * b + c for r, c in w.labeling]
    if sorted(mapping) != list(range(g.node_count)):
        return False
    expect = direct_product(w.factor_a, w.factor_b, node_limit=None)
    return relabel(g, mapping).edges == expect.edges


def witness_to_json(w: FactorizationWitness) -> dict:
    """Witness report: factor orders, factor edge lists, labeling pairs."""
    return {
        "a_order": w.factor_a.node_count,
        "b_order": w.factor_b.node_count,
        "a_edges": [list(e) for e in w.factor_a.sorted_edges()],
        "b_edges": [list(e) for e in w.factor_b.sorted_edges()],
        "labeling": [list(pair) for pair in w.labeling],
    }


def _vertex_order(g: Graph) -> list[int]:
    """Components in order of their smallest vertex, BFS inside each."""
    order: list[int] = []
    for comp in connected_components(g):
        comp_set = set(comp)
        adj: dict[int, list[int]] = {v: [] for v in comp}
        for u, v in g.edges:
            if u != v and u in comp_set:
                adj[u].append(v)
                adj[v].append(u)
        start = comp[0]
        seen = {start}
        queue = [start]
        while queue:
            u = queue.pop(0)
            order.append(u)
            for w in sorted(adj[u]):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


def _check_fixed_a(fixed_a, a: int) -> list[list[int]]:
    mat = np.asarray(fixed_a)
    if mat.shape != (a, a):
        raise ValueError(f"fixed_a must be a {a}x{a} matrix")
    if not np.array_equal(mat, mat.T) or not np.isin(mat, (0, 1)).all():
        raise ValueError("fixed_a must be a symmetric 0/1 matrix")
    return [[int(x) for x in row] for row in mat]


def _row_transitive(cells: list[list[int]], a: int) -> bool:
    """Whether every row can be carried to row 0 by a symmetry of the matrix."""
    reachable = {0}
    for perm in permutations(range(a)):
        if all(cells[perm[i]][perm[j]] == cells[i][j] for i in range(a) for j in range(a)):
            reachable.update(i for i in range(a) if perm[i] == 0)
    return len(reachable) == a


def _symmetric_matrices(a: int) -> list[list[list[int]]]:
    """All symmetric 0/1 a-by-a matrices, in ascending bitmask order."""
    cells = [(i, j) for i in range(a) for j in range(i, a)]
    out = []
    for mask in range(1 << len(cells)):
        mat = [[0] * a for _ in range(a)]
        for bit, (i, j) in enumerate(cells):
            if mask >> bit & 1:
                mat[i][j] = mat[j][i] = 1
        out.append(mat)
    return out


def _vertex_rowsums(g: Graph) -> list[int]:
    """Nonzero count per adjacency row (a loop contributes one)."""
    sums = [0] * g.node_count
    for u, v in g.edges:
        sums[u] += 1
        if u != v:
            sums[v] += 1
    return sums


def _left_factor_feasible(a_cells: list[list[int]], g: Graph, g_bipartite: bool) -> bool:
    """Necessary counting conditions for g = A (x) B with this left factor."""
    a = len(a_cells)
    nz_a = sum(sum(row) for row in a_cells)
    nz_g = g.nonzero_count
    if nz_g > 0:
        if nz_a == 0 or nz_g % nz_a != 0:
            return False
        b = g.node_count // a
        if nz_g // nz_a > b * b:
            return False
    loops_a = sum(a_cells[i][i] for i in range(a))
    loops_g = g.loop_count
    if loops_g > 0 and loops_a == 0:
        return False
    if loops_a > 0:
        b = g.node_count // a
        if loops_g % loops_a != 0 or loops_g // loops_a > b:
            return False
    zero_rows = sum(1 for row in a_cells if not any(row))
    if zero_rows:
        b = g.node_count // a
        isolated = sum(1 for d in _vertex_rowsums(g) if d == 0)
        if zero_rows * b > isolated:
            return False
    if not g_bipartite:
        a_graph = Graph(
            a, frozenset((i, j) for i in range(a) for j in range(i, a) if a_cells[i][j])
        )
        if is_bipartite(a_graph) and nz_g > 0:
            # a bipartite left factor only produces bipartite products
            return False
    return True


class _FactorSearch:
    """Backtracking labeler for one fully specified left factor."""

    def __init__(self, g: Graph, a: int, b: int, a_cells: list[list[int]], pin_first_row: bool):
        self.g = g
        self.n = g.node_count
        self.a = a
        self.b = b
        n = self.n
        self.adj = [[0] * n for _ in range(n)]
        for u, v in g.edges:
            self.adj[u][v] = 1
            self.adj[v][u] = 1
        self.acell = a_cells
        self.pin_first_row = pin_first_row
        # row sums multiply across a Kronecker product, so vertex v fits in
        # row r only if rowsum_A(r) divides its adjacency row sum
        a_rowsums = [sum(row) for row in a_cells]
        self.allowed_rows = []
        for d in _vertex_rowsums(g):
            rows = []
            for r in range(a):
                ar = a_rowsums[r]
                if ar == 0:
                    if d == 0:
                        rows.append(r)
                elif d % ar == 0 and d // ar <= b:
                    rows.append(r)
            self.allowed_rows.append(rows)
        self.bcell = [[-1] * b for _ in range(b)]
        self.trail: list[tuple[int, int]] = []
        self.rows = [-1] * n
        self.cols = [-1] * n
        self.used = [[False] * b for _ in range(a)]
        self.col_load = [0] * b
        self.assigned: list[int] = []
        self.order = _vertex_order(g)

    def _constraints_ok(self, v: int, r: int, c: int) -> bool:
        """Commit the B cells this placement forces; False on contradiction."""
        adj_v = self.adj[v]
        rows, cols = self.rows, self.cols
        acell_r = self.acell[r]
        bcell = self.bcell
        trail = self.trail
        for u in self.assigned:
            e = adj_v[u]
            if acell_r[rows[u]]:
                cu = cols[u]
                k, l = (c, cu) if c <= cu else (cu, c)
                cur = bcell[k][l]
                if cur < 0:
                    bcell[k][l] = e
                    trail.append((k, l))
                elif cur != e:
                    return False
            elif e:
                return False
        e = adj_v[v]
        if acell_r[r]:
            cur = bcell[c][c]
            if cur < 0:
                bcell[c][c] = e
                trail.append((c, c))
            elif cur != e:
                return False
        elif e:
            return False
        return True

    def _undo(self, mark: int) -> None:
        trail = self.trail
        bcell = self.bcell
        while len(trail) > mark:
            k, l = trail.pop()
            bcell[k][l] = -1

    def _candidates(self, idx: int, v: int) -> list[tuple[int, int]]:
        if idx == 0 and self.pin_first_row:
            row_range = [0] if 0 in self.allowed_rows[v] else []
        else:
            row_range = self.allowed_rows[v]
        # untouched columns of B are interchangeable: used ones + first fresh
        col_range = []
        for c in range(self.b):
            col_range.append(c)
            if self.col_load[c] == 0:
                break
        out = []
        for r in row_range:
            used_r = self.used[r]
            for c in col_range:
                if not used_r[c]:
                    out.append((r, c))
        return out

    def _search(self, idx: int) -> FactorizationWitness | None:
        if idx == self.n:
            return self._finish()
        v = self.order[idx]
        for r, c in self._candidates(idx, v):
            mark = len(self.trail)
            if self._constraints_ok(v, r, c):
                self.rows[v] = r
                self.cols[v] = c
                self.used[r][c] = True
                self.col_load[c] += 1
                self.assigned.append(v)
                found = self._search(idx + 1)
                if found is not None:
                    return found
                self.assigned.pop()
                self.col_load[c] -= 1
                self.used[r][c] = False
                self.rows[v] = -1
                self.cols[v] = -1
            self._undo(mark)
        return None

    def _finish(self) -> FactorizationWitness:
        a_edges = {
            (i, j)
            for i in range(self.a)
            for j in range(i, self.a)
            if self.acell[i][j] == 1
        }
        b_edges = {
            (k, l)
            for k in range(self.b)
            for l in range(k, self.b)
            if self.bcell[k][l] == 1
        }
        witness = FactorizationWitness(
            Graph(self.a, frozenset(a_edges)),
            Graph(self.b, frozenset(b_edges)),
            tuple((self.rows[v], self.cols[v]) for v in range(self.n)),
        )
        assert witness_is_valid(self.g, witness)
        return witness

    def run(self) -> FactorizationWitness | None:
        return self._search(0)


def factor_search(
    g: Graph,
    a: int,
    b: int,
    *,
    node_limit: int | None = DEFAULT_NODE_LIMIT,
    fixed_a=None,
) -> FactorizationWitness | None:
    """Find graphs A (order a) and B (order b) with g = direct(A, B), if any.

    ``fixed_a`` pins the adjacency matrix of the left factor, restricting the
    search to factorizations through that exact left factor.  Returned
    witnesses are re-verified by product recomputation before return.
    """
    if node_limit is not None and g.node_count > node_limit:
        raise SizeLimitError(
            f"graph order {g.node_count} exceeds the {node_limit}-node bound"
        )
    if a < 2 or b < 2 or a > b:
        raise ValueError("factor orders must satisfy 2 <= a <= b")
    if a * b != g.node_count:
        raise ValueError(f"{a} * {b} != {g.node_count} nodes")
    if fixed_a is not None:
        candidates = [_check_fixed_a(fixed_a, a)]
        prefilter = False
    else:
        candidates = _symmetric_matrices(a)
        prefilter = True
    g_bipartite = is_bipartite(g)
    for a_cells in candidates:
        if prefilter and not _left_factor_feasible(a_cells, g, g_bipartite):
            continue
        pin = _row_transitive(a_cells, a)
        found = _FactorSearch(g, a, b, a_cells, pin).run()
        if found is not None:
            return found
    return None


def _divisor_pairs(n: int) -> list[tuple[int, int]]:
    return [(a, n // a) for a in range(2, int(n**0.5) + 1) if n % a == 0]


def find_factorization(
    g: Graph, *, node_limit: int | None = DEFAULT_NODE_LIMIT
) -> FactorizationWitness | None:
    """First factorization over divisor pairs in increasing left order, or None."""
    if node_limit is not None and g.node_count > node_limit:
        raise SizeLimitError(
            f"graph order {g.node_count} exceeds the {node_limit}-node bound"
        )
    for a, b in _divisor_pairs(g.node_count):
        witness = factor_search(g, a, b, node_limit=node_limit)
        if witness is not None:
            return witness
    return None


def is_prime_direct(g: Graph, *, node_limit: int | None = DEFAULT_NODE_LIMIT) -> bool:
    """Primality under the direct product.

    The single-node graph is neither prime nor composite; it reports False
    here and is called out as trivial by the CLI.
    """
    if g.node_count < 1:
        raise ValueError("primality is undefined for the empty graph")
    if node_limit is not None and g.node_count > node_limit:
        raise SizeLimitError(
            f"graph order {g.node_count} exceeds the {node_limit}-node bound"
        )
    if g.node_count == 1:
        return False
    return find_factorization(g, node_limit=node_limit) is None


# -- disjoint unions of two equal-order connected graphs ---------------------


def factorization_from_isomorphism(
    g1: Graph, g2: Graph, witness: IsomorphismWitness
) -> FactorizationWitness:
    """Explicit doubling factorization of g1 u g2 built from an isomorphism.

    The left factor is D2 (two looped nodes, no cross edge); the right factor
    is g1.  Vertices of g1 keep their labels in row 0, vertices of g2 land in
    row 1 at the position of their preimage under the isomorphism.
    """
    n = g1.node_count
    if g2.node_count != n:
        raise ValueError("graphs must have equal order")
    if n < 2:
        raise ValueError("doubling factorization needs order at least 2")
    if not (is_connected(g1) and is_connected(g2)):
        raise PreconditionError("both graphs must be connected")
    if not is_isomorphism(g1, g2, witness.mapping):
        raise ValueError("witness is not an isomorphism from g1 to g2")
    inverse = [0] * n
    for src, dst in enumerate(witness.mapping):
        inverse[dst] = src
    labeling = [(0, v) for v in range(n)]
    labeling.extend((1, inverse[u]) for u in range(n))
    out = FactorizationWitness(D2, g1, tuple(labeling))
    assert witness_is_valid(disjoint_union(g1, g2), out)
    return out


def isomorphism_from_union_factorization(
    g1: Graph, g2: Graph, *, node_limit: int | None = DEFAULT_NODE_LIMIT
) -> IsomorphismWitness | None:
    """Recover an isomorphism g1 -> g2 from a doubling factorization, if any.

    Searches the disjoint union for a factorization whose left factor is
    pinned to D2.  Connectivity forces each input graph into a single row of
    the labeling, so matching column positions across the two rows reads off
    the isomorphism.  Returns None exactly when no such factorization exists.
    """
    n = g1.node_count
    if g2.node_count != n:
        raise ValueError("graphs must have equal order")
    if n < 2:
        raise ValueError("union factorization needs order at least 2")
    if not (is_connected(g1) and is_connected(g2)):
        raise PreconditionError("both graphs must be connected")
    union = disjoint_union(g1, g2)
    found = factor_search(union, 2, n, node_limit=node_limit, fixed_a=I2_MATRIX)
    if found is None:
        return None
    row_of_g1 = found.labeling[0][0]
    assert all(r == row_of_g1 for r, _ in found.labeling[:n])
    assert all(r != row_of_g1 for r, _ in found.labeling[n:])
    col_to_g2_vertex = {c: u for u, (_, c) in enumerate(found.labeling[n:])}
    mapping = tuple(col_to_g2_vertex[c] for _, c in found.labeling[:n])
    out = IsomorphismWitness(mapping)
    assert is_isomorphism(g1, g2, out.mapping)
    return out


# -- the two-block elimination decider ---------------------------------------

_ALL_2X2 = [
    ((a00, a01), (a10, a11))
    for a00 in (0, 1)
    for a01 in (0, 1)
    for a10 in (0, 1)
    for a11 in (0, 1)
]
_I2 = ((1, 0), (0, 1))
_ANTIDIAG = ((0, 1), (1, 0))


def two_block_survivors(g1: Graph, g2: Graph) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """2x2 left-factor candidates for g1 u g2 that survive the counting filters.

    Filters, in order: the union is undirected so A must be symmetric; both
    components have minimum degree >= 1 so A needs at least two nonzero
    entries; with k nonzeros in A the product has k * nnz(B) nonzero entries,
    which must equal nnz(g1) + nnz(g2), ruling out k = 3 and k = 4 whenever
    that total is not divisible by 3 resp. 4; the antidiagonal A would make
    the product bipartite while the union is not.
    """
    total = g1.nonzero_count + g2.nonzero_count
    survivors = []
    for mat in _ALL_2X2:
        if mat[0][1] != mat[1][0]:
            continue
        nonzeros = mat[0][0] + mat[0][1] + mat[1][0] + mat[1][1]
        if nonzeros < 2:
            continue
        if nonzeros == 3 and total % 3 != 0:
            continue
        if nonzeros == 4 and total % 4 != 0:
            continue
        if mat == _ANTIDIAG:
            continue
        survivors.append(mat)
    return survivors


def _first_violation(report) -> str:
    return report.violations()[0]


def union_compositeness_by_elimination(g1: Graph, g2: Graph) -> bool:
    """Decide compositeness of g1 u g2 for equal-count class G members.

    Any factorization of the union must split its 2n nodes as 2 x n because n
    is prime, so only a 2x2 left factor is possible.  The counting filters of
    :func:`two_block_survivors` leave the identity matrix alone, reducing
    compositeness of the union to existence of an isomorphism g1 -> g2.
    """
    for g, which in ((g1, "first"), (g2, "second")):
        report = class_g_check(g)
        if not report.member:
            raise PreconditionError(
                f"{which} graph is outside class G: {_first_violation(report)}",
                report=report,
            )
    if g1.node_count != g2.node_count or g1.edge_count != g2.edge_count:
        raise ValueError("elimination requires equal node and edge counts")
    survivors = two_block_survivors(g1, g2)
    assert _I2 in survivors
    if len(survivors) > 1:
        # Reachable only when the loop counts differ.  Every survivor other
        # than I2 carries a loop and a cross edge, hence is connected and
        # nonbipartite, so all components of A (x) B would have even order;
        # this union's components have odd prime order.
        assert g1.node_count % 2 == 1
        survivors = [_I2]
    return are_isomorphic(g1, g2, node_limit=None) is not None


# -- ready-made compositeness oracles ----------------------------------------


def search_oracle(g: Graph) -> bool:
    """Compositeness by exhaustive factor search, with no size bound."""
    if g.node_count <= 1:
        return False
    return find_factorization(g, node_limit=None) is not None


def elimination_oracle(g: Graph) -> bool:
    """Compositeness of a two-component union via the elimination argument."""
    comps = connected_components(g)
    if len(comps) != 2:
        raise PreconditionError("elimination oracle needs exactly two components")
    c1 = induced_subgraph(g, comps[0])
    c2 = induced_subgraph(g, comps[1])
    if c1.node_count != c2.node_count:
        raise PreconditionError("elimination oracle needs equal-order components")
    if c1.edge_count != c2.edge_count:
        # Padding same-order same-size inputs with different loop counts lands
        # here: both components are in class G but their edge counts differ.
        # The union splits only as 2 x p (p prime), I2 would force isomorphic
        # components (equal edge counts), and every other admissible left
        # factor forces even-order components; so the union is prime.
        for c, which in ((c1, "first"), (c2, "second")):
            report = class_g_check(c)
            if not report.member:
                raise PreconditionError(
                    f"{which} component is outside class G: {_first_violation(report)}",
                    report=report,
                )
        return False
    return union_compositeness_by_elimination(c1, c2)
