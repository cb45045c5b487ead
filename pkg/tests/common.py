"""Shared generators for the test suite."""

from itertools import product

from posetcones import poset_from_relations


def is_transitive(rel):
    for a, b in rel:
        for c, d in rel:
            if b == c and (a, d) not in rel:
                return False
    return True


def all_labeled_posets(n):
    """Every strict partial order on labels 1..n, one Poset per relation set.

    Each unordered pair is oriented one of three ways (none, up, down); the
    transitivity filter keeps exactly the partial orders.
    """
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    out = []
    for choice in product((0, 1, 2), repeat=len(pairs)):
        rel = set()
        for c, (i, j) in zip(choice, pairs):
            if c == 1:
                rel.add((i, j))
            elif c == 2:
                rel.add((j, i))
        if is_transitive(rel):
            out.append(poset_from_relations(n, sorted(rel)))
    return out


def transitive_closure_pairs(n, pairs):
    reach = [[False] * (n + 1) for _ in range(n + 1)]
    for a, b in pairs:
        reach[a][b] = True
    for k in range(1, n + 1):
        for i in range(1, n + 1):
            if reach[i][k]:
                row_i, row_k = reach[i], reach[k]
                for j in range(1, n + 1):
                    if row_k[j]:
                        row_i[j] = True
    return {(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if reach[i][j]}
