"""Walk through the two bijections: cycle-type permutations <-> linear
extensions, and the two-chain refinement onto partitions with descent pairs.

Run: python3 demos/bijections_tour.py
"""

from posetcones import (
    chain_cover_width2,
    count_linear_extensions,
    des_p1p2,
    level_decompose,
    linear_extensions,
    lrmax_count,
    omega,
    omega_inv,
    parse_permutation,
    partition_to_text,
    permutation_to_text,
    phi,
    poincare_via_transverse,
    poset_from_relations,
    psi,
)

RELATIONS = [
    (13, 6), (1, 6), (1, 7), (9, 7), (9, 2), (11, 2),
    (11, 5), (4, 12), (7, 3), (3, 10), (2, 10),
]


def main():
    P = poset_from_relations(13, RELATIONS)
    print(f"A 13-point poset with {len(RELATIONS)} covering relations.")
    print()

    tau = parse_permutation("(4)(6,3)(9)(10)(11,7)(12,5,8,2)(13,1)")
    print(f"Forward map on tau = {permutation_to_text(tau, cycles=True)}")
    word = phi(P, tau)
    print(f"  phi(tau) = {list(word)}")
    le = level_decompose(P, word)
    print(f"  its level blocks:   {[list(b) for b in le.levels]}")
    print(f"  essential elements: {sorted(le.essential)}")
    print(f"  cut positions read back the cycles; psi returns "
          f"{permutation_to_text(psi(P, word), cycles=True)}")
    print(f"  cycles of tau = {tau.cycle_count()}, "
          f"P-left-to-right maxima of the word = {lrmax_count(P, word)}")
    print()

    p = poincare_via_transverse(P)
    print(f"Globally the map is a bijection: Poin(P,t) = {p.human_str()}")
    print(f"  counts {p(1)} admissible permutations = "
          f"{count_linear_extensions(P)} extensions.")
    print()

    Q = poset_from_relations(4, [(1, 2), (3, 4)])
    d = chain_cover_width2(Q)
    print(f"Two-chain refinement on the union of chains 1<2 and 3<4 "
          f"(chains {list(d.p1)} / {list(d.p2)}):")
    for w in linear_extensions(Q):
        pi = omega(Q, d, w)
        pairs = sum(1 for b in pi.blocks if len(b) == 2)
        assert omega_inv(Q, d, pi) == w
        print(f"  {list(w)} -> {partition_to_text(pi)}   pairs={pairs} "
              f"(descents={des_p1p2(Q, d, w)})")


if __name__ == "__main__":
    main()
