"""Multiset permutations under the intercalation product: prime
factorization, the cycle statistic, and the word <-> permutation transfer.

Run: python3 demos/factorization_tour.py
"""

from posetcones import (
    factorization_count,
    foata_phi,
    foata_phi_inv,
    intercalation,
    multiset_perm_to_text,
    parse_multiset_perm,
    permutation_to_text,
    prime_decompose,
)
from posetcones.foata import fcyc, intercalate_all


def main():
    u = parse_multiset_perm("2,3,4;4,2,3")
    v = parse_multiset_perm("1,1,2,2,3,4,4;2,4,3,1,1,4,2")
    sigma = intercalation(u, v)
    print("Intercalation product (columns merge by stable sort on top letter):")
    print(f"  {multiset_perm_to_text(u)}  *  {multiset_perm_to_text(v)}")
    print(f"  = {multiset_perm_to_text(sigma)}")
    print()

    factors = prime_decompose(sigma)
    print(f"Prime factorization of the product ({len(factors)} factors, "
          f"fcyc = {fcyc(sigma)}):")
    for f in factors:
        print(f"  {multiset_perm_to_text(f)}")
    print(f"  reassembled: {intercalate_all(factors) == sigma}")
    print(f"  distinct factor orderings that work: {factorization_count(sigma)}")
    print("  (the two middle factors share no letter, so they commute)")
    print()

    a = (2, 3, 2, 3)
    lam = (3, 8, 9, 6, 1, 4, 2, 7, 10, 5)
    tau = foata_phi(a, lam)
    print(f"Transfer for chain sizes {a}: the word {list(lam)}")
    print(f"  maps to {permutation_to_text(tau, cycles=True)}")
    print(f"  and back to {list(foata_phi_inv(a, tau))}")

    x = parse_multiset_perm("1,2;2,1")
    y = parse_multiset_perm("1,3;3,1")
    print()
    print("The product is not commutative when supports overlap:")
    print(f"  x*y = {multiset_perm_to_text(intercalation(x, y))}")
    print(f"  y*x = {multiset_perm_to_text(intercalation(y, x))}")


if __name__ == "__main__":
    main()
