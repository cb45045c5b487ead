"""Tour of the cone polynomial: four computation routes and the identities
that tie them together.

Run: python3 demos/cone_polynomials.py
"""

from posetcones import (
    count_linear_extensions,
    grid,
    opposite,
    ordinal_sum,
    poincare_via_foata,
    poincare_via_lrmax,
    poincare_via_transverse,
    poincare_via_width2,
    poset_from_relations,
    union_of_chains,
)


def show(title, poly):
    print(f"  {title}: {poly.human_str()}")


def main():
    print("A poset on {1..4} with the single relation 3 < 4.")
    P = poset_from_relations(4, [(3, 4)])
    show("via transverse partitions", poincare_via_transverse(P))
    show("via left-to-right maxima ", poincare_via_lrmax(P))
    print(f"  value at t=1: {poincare_via_transverse(P)(1)}"
          f"  (= #LinExt = {count_linear_extensions(P)})")
    print()

    print("Two disjoint chains 1<2 and 3<4 admit two more routes.")
    Q2 = union_of_chains((2, 2))
    show("via transverse partitions", poincare_via_transverse(Q2))
    show("via two-chain descents   ", poincare_via_width2(Q2))
    show("via word factorizations  ", poincare_via_foata((2, 2)))
    print()

    print("Unions of chains go through the factorization route in general.")
    a = (2, 3, 2, 3)
    Q = union_of_chains(a)
    show(f"chains {a}, via partitions ", poincare_via_transverse(Q))
    show(f"chains {a}, via words      ", poincare_via_foata(a))
    print()

    print("Structural identities (checked exactly):")
    R = grid(3, 3)
    p = poincare_via_transverse(R)
    print(f"  self-duality:      Poin(P) == Poin(P^op)"
          f"  -> {p == poincare_via_transverse(opposite(R))}")
    S = ordinal_sum(P, Q)
    print(f"  ordinal sums:      Poin(P (+) Q) == Poin(P) * Poin(Q)"
          f"  -> {poincare_via_transverse(S) == p_times(P, Q)}")
    print()

    print("The 3 x n grid family (rows also available via the CLI `table`):")
    for n in range(2, 6):
        print(f"  n={n}: {poincare_via_transverse(grid(3, n)).human_str()}")


def p_times(P, Q):
    return poincare_via_transverse(P) * poincare_via_transverse(Q)


if __name__ == "__main__":
    main()
