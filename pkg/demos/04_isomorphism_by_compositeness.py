#!/usr/bin/env python3
"""Deciding graph isomorphism with a single compositeness query.

For class G members, the union g1 u g2 is composite exactly when g1 and g2
are isomorphic, so one call to a compositeness decider settles isomorphism.
Arbitrary connected graphs are first padded into class G by an
isomorphism-preserving transformation: a prime-order gadget made of a fan
hub, a long cycle, and up to three residue-fixing loops.
"""

from graphprod import (
    are_isomorphic,
    class_g_check,
    class_g_isomorphism,
    elimination_oracle,
    graph_isomorphism_via_compositeness,
    pad_to_class_g,
    relabel,
    search_oracle,
)
from graphprod.catalog import C5_LOOP, K1_3, NAMED, P4


def main():
    print("-- class G members: one oracle call, no padding needed")
    other = NAMED["c5_loop_perm"]
    print("C5+loop vs relabeled copy, search oracle:",
          class_g_isomorphism(C5_LOOP, other, search_oracle))
    print("C5+loop vs relabeled copy, elimination oracle:",
          class_g_isomorphism(C5_LOOP, other, elimination_oracle))
    print()

    print("-- arbitrary connected graphs: pad into class G first")
    for g, name in ((P4, "P4"), (K1_3, "K1,3")):
        result = pad_to_class_g(g)
        report = class_g_check(result.padded)
        print(f"pad({name}): prime {result.chosen_prime}, "
              f"{result.loops_added} loops, member={report.member}")
    print()

    pairs = [
        ("P4 vs relabeled P4", P4, relabel(P4, [0, 2, 1, 3])),
        ("P4 vs K1,3 (same counts)", P4, K1_3),
    ]
    for label, g1, g2 in pairs:
        via_reduction = graph_isomorphism_via_compositeness(g1, g2, search_oracle)
        direct = are_isomorphic(g1, g2) is not None
        print(f"{label}: reduction says {via_reduction}, direct check says {direct}")


if __name__ == "__main__":
    main()
