import random
from math import factorial

import pytest

from posetcones import (
    NotTransverse,
    ParseError,
    SetPartition,
    all_partitions,
    antichain,
    chain,
    count_linear_extensions,
    enumerate_transverse,
    grid,
    is_transverse,
    mobius_abs,
    opposite,
    ordinal_sum,
    parse_partition,
    partition_to_text,
    poset_from_relations,
    quotient_preposet,
    random_poset,
    transverse_count_check,
    union_of_chains,
)
from posetcones.partitions import (
    brute_force_transverse,
    check_transverse,
    singleton_partition,
    transverse_poly_coeffs,
)

from common import transitive_closure_pairs

BELL = [1, 1, 2, 5, 15, 52, 203, 877]


def test_set_partition_canonical_form():
    pi = SetPartition(4, [(4, 2), (3, 1)])
    assert pi.blocks == ((1, 3), (2, 4))
    assert pi.block_of(4) == 1
    assert pi.block_of(1) == 0
    assert len(pi) == 2
    assert pi == SetPartition(4, [[1, 3], [2, 4]])
    with pytest.raises(ParseError):
        SetPartition(3, [(1, 2)])
    with pytest.raises(ParseError):
        SetPartition(3, [(1, 2), (2, 3)])


def test_mobius_weight():
    assert SetPartition(1, [(1,)]).mobius_abs() == 1
    assert mobius_abs(SetPartition(4, [(1, 2, 3, 4)])) == 6
    assert mobius_abs(SetPartition(4, [(1, 3), (2,), (4,)])) == 1
    # product of (|B|-1)! over blocks
    pi = SetPartition(6, [(1, 2, 3), (4, 5), (6,)])
    assert pi.mobius_abs() == 2


def test_partition_text_round_trip():
    pi = SetPartition(4, [(1, 3), (2, 4)])
    assert partition_to_text(pi) == "1,3|2,4"
    assert parse_partition("1,3|2,4") == pi
    assert parse_partition(" 1 , 3 | 2 , 4 ", n=4) == pi
    assert parse_partition("2,4|3,1") == pi
    with pytest.raises(ParseError):
        parse_partition("1,3|2", n=4)
    with pytest.raises(ParseError):
        parse_partition("1,x")
    assert parse_partition("") == SetPartition(0, [])


def test_all_partitions_counts_and_order():
    for n in range(0, 7):
        parts = list(all_partitions(n))
        assert len(parts) == BELL[n]
        assert len(set(parts)) == len(parts)
    # restricted-growth order: singleton-coarsening comes out lex by block string
    three = [partition_to_text(p) for p in all_partitions(3)]
    assert three[0] == "1,2,3"
    assert three[-1] == "1|2|3"


def test_quotient_preposet():
    P = poset_from_relations(4, [(1, 2), (3, 4)])
    Q = quotient_preposet(P, SetPartition(4, [(1, 3), (2, 4)]))
    assert Q.leq(1, 1) and Q.leq(2, 2)
    assert Q.leq(1, 2) and not Q.leq(2, 1)
    assert Q.is_antisymmetric()
    # merging comparable elements collapses the quotient into a loop
    Q2 = quotient_preposet(P, SetPartition(4, [(1, 4), (2, 3)]))
    assert not Q2.is_antisymmetric()


def test_transverse_recognition_examples():
    P = poset_from_relations(4, [(1, 2), (3, 4)])
    assert is_transverse(P, parse_partition("1,3|2,4"))
    assert not is_transverse(P, parse_partition("1,2|3|4"))
    assert not is_transverse(P, parse_partition("1,4|2,3"))
    check_transverse(P, parse_partition("1,3|2,4"))
    with pytest.raises(NotTransverse):
        check_transverse(P, parse_partition("1,2|3|4"))


def test_transverse_ten_element_example():
    P = union_of_chains((2, 3, 2, 3))
    pi = parse_partition("1,4,7|2,5,10|3,6,8|9")
    assert is_transverse(P, pi)
    assert pi.mobius_abs() == 8


def test_enumerate_transverse_worked_example():
    P = poset_from_relations(4, [(1, 2), (3, 4)])
    got = {partition_to_text(pi) for pi in enumerate_transverse(P)}
    assert got == {
        "1|2|3|4", "1,3|2|4", "1|2,3|4", "1|2,4|3", "1,4|2|3", "1,3|2,4",
    }


def test_enumerate_transverse_extremes():
    assert list(enumerate_transverse(antichain(0))) == [SetPartition(0, [])]
    for n in range(1, 6):
        assert len(list(enumerate_transverse(antichain(n)))) == BELL[n]
        assert list(enumerate_transverse(chain(n))) == [singleton_partition(n)]


def test_enumeration_matches_brute_force():
    rng = random.Random(41)
    for _ in range(150):
        n = rng.randint(1, 6)
        P = random_poset(n, rng.choice([0.15, 0.35, 0.6, 0.85]), rng)
        fast = sorted(enumerate_transverse(P), key=lambda p: p.blocks)
        slow = sorted(brute_force_transverse(P), key=lambda p: p.blocks)
        assert fast == slow
        assert len(set(fast)) == len(fast)


def test_alternative_condition_closure_check():
    """Merging a partition into the order relation must never create a
    reversed strict pair; cross-check against the quotient route on every
    partition of small random posets."""
    rng = random.Random(43)
    for _ in range(60):
        n = rng.randint(1, 5)
        P = random_poset(n, rng.choice([0.2, 0.5, 0.8]), rng)
        strict = set(P.relations())
        for pi in all_partitions(n):
            pairs = set(strict)
            for blk in pi.blocks:
                for a in blk:
                    for b in blk:
                        if a != b:
                            pairs.add((a, b))
            closure = transitive_closure_pairs(n, pairs)
            alt = not any((j, i) in closure for (i, j) in strict)
            assert alt == is_transverse(P, pi)


def test_transversality_is_self_dual():
    rng = random.Random(47)
    for _ in range(40):
        P = random_poset(rng.randint(1, 6), 0.4, rng)
        forward = set(enumerate_transverse(P))
        backward = set(enumerate_transverse(opposite(P)))
        assert forward == backward


def test_ordinal_sum_splits_blocks():
    # no block of a transverse partition may straddle the two summands
    P = ordinal_sum(antichain(2), antichain(2))
    for pi in enumerate_transverse(P):
        for blk in pi.blocks:
            assert set(blk) <= {1, 2} or set(blk) <= {3, 4}


def test_poly_coeffs_accumulate_weights():
    for P in (
        poset_from_relations(4, [(3, 4)]),
        poset_from_relations(4, [(1, 2), (3, 4)]),
        antichain(4),
        chain(5),
        grid(2, 3),
    ):
        coeffs = transverse_poly_coeffs(P)
        by_hand = [0] * (P.n + 1)
        for pi in enumerate_transverse(P):
            by_hand[P.n - len(pi)] += pi.mobius_abs()
        while by_hand and by_hand[-1] == 0:
            by_hand.pop()
        assert list(coeffs) == by_hand


def test_weight_sum_equals_extension_count():
    rng = random.Random(53)
    for _ in range(80):
        P = random_poset(rng.randint(0, 6), rng.choice([0.2, 0.5, 0.8]), rng)
        assert transverse_count_check(P)
        total = sum(pi.mobius_abs() for pi in enumerate_transverse(P))
        assert total == count_linear_extensions(P)
    assert sum(pi.mobius_abs() for pi in enumerate_transverse(antichain(5))) == factorial(5)
