"""Class G membership, the padding transformation, and reduction drivers.

Class G is the domain on which compositeness of a disjoint union encodes
isomorphism.  A graph with n nodes, m edges, and s self-loops belongs to
class G iff

* P1: it is connected and not bipartite;
* P2: n is prime;
* P3: s < m;
* P4: 2m - s is not divisible by 2;
* P5: 2m - s is not divisible by 3.

:func:`pad_to_class_g` maps any connected graph into class G while
preserving isomorphism both ways: pick a prime p strictly between 2n and 4n,
fan every original node out to one new hub node, run a single cycle through
all p - n new nodes (longer than any simple cycle the original graph can
hold), then add up to three self-loops on the early cycle nodes to fix the
2m - s residues.  The construction is deterministic, so equal inputs give
byte-equal results.

The drivers at the bottom decide isomorphism with a single call to a
compositeness oracle, a callable taking the disjoint union and returning
True iff it is composite under the direct product.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Callable

from .core import (
    Edge,
    Graph,
    PreconditionError,
    disjoint_union,
    format_edge_list,
    is_bipartite,
    is_connected,
)

CompositenessOracle = Callable[[Graph], bool]


@dataclass(frozen=True)
class ClassGReport:
    """Pass/fail of the five class G properties; member iff all hold."""

    member: bool
    p1_connected_nonbipartite: bool
    p2_prime_order: bool
    p3_loops_lt_edges: bool
    p4_not_div2: bool
    p5_not_div3: bool

    def violations(self) -> list[str]:
        out = []
        if not self.p1_connected_nonbipartite:
            out.append("P1: not connected and nonbipartite")
        if not self.p2_prime_order:
            out.append("P2: node count is not prime")
        if not self.p3_loops_lt_edges:
            out.append("P3: self-loops do not number fewer than edges")
        if not self.p4_not_div2:
            out.append("P4: 2m - s is divisible by 2")
        if not self.p5_not_div3:
            out.append("P5: 2m - s is divisible by 3")
        return out


def is_prime_int(x: int) -> bool:
    if x < 2:
        return False
    if x < 4:
        return True
    if x % 2 == 0:
        return False
    f = 3
    while f * f <= x:
        if x % f == 0:
            return False
        f += 2
    return True


def class_g_check(g: Graph) -> ClassGReport:
    """Evaluate the five class G properties for any graph."""
    n = g.node_count
    m = g.edge_count
    s = g.loop_count
    t = 2 * m - s
    p1 = n > 0 and is_connected(g) and not is_bipartite(g)
    p2 = is_prime_int(n)
    p3 = s < m
    p4 = t % 2 != 0
    p5 = t % 3 != 0
    return ClassGReport(p1 and p2 and p3 and p4 and p5, p1, p2, p3, p4, p5)


# offset d fixing both residues, keyed by (t mod 2, t mod 3)
_OFFSET_TABLE = {
    (0, 0): 1,
    (0, 1): 1,
    (0, 2): 3,
    (1, 0): 2,
    (1, 1): 0,
    (1, 2): 0,
}


def div2div3_offset(t: int) -> int:
    """Smallest table offset d in {0..3} with t + d indivisible by 2 and by 3."""
    return _OFFSET_TABLE[(t % 2, t % 3)]


_sieve_primes: list[int] = []
_sieve_limit = 0


def _primes_up_to(limit: int) -> list[int]:
    global _sieve_primes, _sieve_limit
    if limit > _sieve_limit:
        size = max(limit, 2 * _sieve_limit, 1024)
        mark = bytearray([1]) * (size + 1)
        mark[0] = mark[1] = 0
        for p in range(2, int(size**0.5) + 1):
            if mark[p]:
                mark[p * p :: p] = bytearray(len(mark[p * p :: p]))
        _sieve_primes = [i for i, keep in enumerate(mark) if keep]
        _sieve_limit = size
    return _sieve_primes


def prime_in_bertrand_range(n: int) -> int:
    """Smallest prime p with 2n < p < 4n (exists for every n >= 2)."""
    if n < 2:
        raise ValueError("need n >= 2")
    primes = _primes_up_to(4 * n)
    idx = bisect_right(primes, 2 * n)
    if idx >= len(primes) or primes[idx] >= 4 * n:  # pragma: no cover
        raise AssertionError(f"no prime strictly between {2 * n} and {4 * n}")
    return primes[idx]


def _primes_in_open_range(lo: int, hi: int) -> list[int]:
    primes = _primes_up_to(hi)
    return [p for p in primes[bisect_right(primes, lo) :] if p < hi]


@dataclass(frozen=True)
class PaddingResult:
    """The padded graph plus construction bookkeeping."""

    padded: Graph
    chosen_prime: int
    fan_edges: tuple[Edge, ...]
    cycle_edges: tuple[Edge, ...]
    loops_added: int

    @property
    def loop_nodes(self) -> tuple[int, ...]:
        first = self.padded.node_count - len(self.cycle_edges) + 1
        return tuple(range(first, first + self.loops_added))


def pad_to_class_g(g: Graph) -> PaddingResult:
    """Embed a connected graph (at least 2 nodes) into class G.

    New nodes n..p-1 are appended: node n is the fan hub adjacent to every
    original node, the new nodes form one cycle n -> n+1 -> ... -> p-1 -> n,
    and d <= 3 self-loops go on nodes n+1, n+2, n+3 as needed.  Each loop
    raises 2m - s by one, so d is the residue offset for the loop-free total.
    The smallest admissible prime is chosen; a prime is skipped only in the
    one corner (n = 2, p = 5, d = 3) where the loop nodes would not all
    exist, in which case p = 7 restores the construction.
    """
    n = g.node_count
    if n < 2:
        raise PreconditionError("padding needs at least 2 nodes")
    if not is_connected(g):
        raise PreconditionError("padding is defined for connected graphs only")
    m = g.edge_count
    s = g.loop_count
    chosen = None
    for p in _primes_in_open_range(2 * n, 4 * n):
        base_total = 2 * (m + p) - s  # 2m - s after fan and cycle edges
        d = div2div3_offset(base_total)
        if p - n >= d + 1:
            chosen = (p, d)
            break
    assert chosen is not None
    p, d = chosen
    fan = tuple((x, n) for x in range(n))
    cycle = tuple((n + i, n + i + 1) for i in range(p - n - 1)) + ((n, p - 1),)
    loops = tuple((n + i, n + i) for i in range(1, d + 1))
    padded = Graph(p, frozenset(g.edges) | set(fan) | set(cycle) | set(loops))
    result = PaddingResult(padded, p, fan, cycle, d)
    report = class_g_check(padded)
    assert report.member, report.violations()
    assert p - n > n
    return result


def padding_result_to_json(result: PaddingResult) -> dict:
    return {
        "p": result.chosen_prime,
        "d": result.loops_added,
        "fan_edges": [list(e) for e in result.fan_edges],
        "cycle_edges": [list(e) for e in result.cycle_edges],
        "loop_nodes": list(result.loop_nodes),
        "padded_graph": format_edge_list(result.padded),
    }


def class_g_isomorphism(g1: Graph, g2: Graph, oracle: CompositenessOracle) -> bool:
    """Isomorphism of two class G members via one compositeness query.

    Unequal node or edge counts answer NO without consulting the oracle;
    otherwise the verdict is exactly the oracle's answer on the disjoint
    union.  Inputs outside class G are rejected with their membership report.
    """
    for g, which in ((g1, "first"), (g2, "second")):
        report = class_g_check(g)
        if not report.member:
            raise PreconditionError(
                f"{which} graph is outside class G: {'; '.join(report.violations())}",
                report=report,
            )
    if g1.node_count != g2.node_count or g1.edge_count != g2.edge_count:
        return False
    return oracle(disjoint_union(g1, g2))


def graph_isomorphism_via_compositeness(
    g1: Graph, g2: Graph, oracle: CompositenessOracle
) -> bool:
    """Isomorphism of any two connected graphs via one compositeness query.

    Count filter first, then both graphs are padded into class G and the
    oracle is asked once about the disjoint union of the padded graphs.
    """
    for g, which in ((g1, "first"), (g2, "second")):
        if g.node_count < 2:
            raise PreconditionError(f"{which} graph needs at least 2 nodes")
        if not is_connected(g):
            raise PreconditionError(f"{which} graph must be connected")
    if g1.node_count != g2.node_count or g1.edge_count != g2.edge_count:
        return False
    padded1 = pad_to_class_g(g1).padded
    padded2 = pad_to_class_g(g2).padded
    return oracle(disjoint_union(padded1, padded2))
