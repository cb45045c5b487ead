"""Set partitions of {1..n} and the transverse family of a poset.

A partition is transverse to P when every block is an antichain and the
quotient preposet P/pi stays antisymmetric (collapsing blocks creates no
directed cycle through distinct blocks).  Enumeration peels the partition by
quotient levels: the blocks lying inside min(P) are exactly the removable
ones, so choosing a partial partition of min(P), deleting it, and forbidding
leftover-minima-only blocks at the next step visits each transverse partition
once.
"""

from __future__ import annotations

from itertools import combinations
from math import factorial

from .errors import IndexOutOfRange, NotTransverse, ParseError
from .posets import Poset, is_antichain


class SetPartition:
    """Blocks sorted internally, ordered by smallest element."""

    __slots__ = ("n", "blocks")

    def __init__(self, n, blocks):
        seen = 0
        canon = []
        for blk in blocks:
            b = sorted(blk)
            if not b:
                raise ParseError("empty block")
            for x in b:
                if not 1 <= x <= n:
                    raise IndexOutOfRange(f"element {x} outside 1..{n}")
                if seen >> (x - 1) & 1:
                    raise ParseError(f"element {x} repeated across blocks")
                seen |= 1 << (x - 1)
            canon.append(tuple(b))
        if seen != (1 << n) - 1:
            raise ParseError("blocks do not cover 1..n")
        canon.sort(key=lambda b: b[0])
        self.n = n
        self.blocks = tuple(canon)

    def block_of(self, x: int) -> int:
        for idx, blk in enumerate(self.blocks):
            if x in blk:
                return idx
        raise IndexOutOfRange(f"element {x} outside 1..{self.n}")

    def mobius_abs(self) -> int:
        """|mu(0-hat, pi)| on the partition lattice: prod (|B|-1)!."""
        out = 1
        for blk in self.blocks:
            out *= factorial(len(blk) - 1)
        return out

    def __len__(self):
        return len(self.blocks)

    def __eq__(self, other):
        if not isinstance(other, SetPartition):
            return NotImplemented
        return self.n == other.n and self.blocks == other.blocks

    def __hash__(self):
        return hash((self.n, self.blocks))

    def __repr__(self):
        return f"SetPartition({partition_to_text(self)!r})"


def partition_to_text(pi: SetPartition) -> str:
    """`1,3|2,4` form; blocks by smallest element."""
    return "|".join(",".join(str(x) for x in blk) for blk in pi.blocks)


def parse_partition(text: str, n=None) -> SetPartition:
    text = text.strip()
    if not text:
        if n in (None, 0):
            return SetPartition(0, [])
        raise ParseError("empty partition text for n > 0")
    blocks = []
    for part in text.split("|"):
        try:
            blocks.append([int(tok) for tok in part.split(",") if tok.strip() != ""])
        except ValueError:
            raise ParseError(f"bad block {part!r}") from None
    flat = [x for blk in blocks for x in blk]
    size = max(flat) if n is None else n
    return SetPartition(size, blocks)


def all_partitions(n: int):
    """Every set partition, in lex order of restricted growth strings."""
    if n == 0:
        yield SetPartition(0, [])
        return
    rgs = [0] * n

    def rec(k, nblocks):
        if k == n:
            blocks = [[] for _ in range(nblocks)]
            for idx, b in enumerate(rgs):
                blocks[b].append(idx + 1)
            yield SetPartition(n, blocks)
            return
        for b in range(nblocks + 1):
            rgs[k] = b
            yield from rec(k + 1, max(nblocks, b + 1))

    yield from rec(0, 0)


class Preposet:
    """Reflexive transitive relation on k items (quotient of a poset)."""

    __slots__ = ("k", "rel")

    def __init__(self, k, rel_rows):
        self.k = k
        self.rel = tuple(rel_rows)

    def leq(self, a: int, b: int) -> bool:
        """1-based; reflexive."""
        return bool(self.rel[a - 1] >> (b - 1) & 1)

    def is_antisymmetric(self) -> bool:
        for a in range(self.k):
            for b in range(a + 1, self.k):
                if self.rel[a] >> b & 1 and self.rel[b] >> a & 1:
                    return False
        return True


def quotient_preposet(P: Poset, pi: SetPartition) -> Preposet:
    """Blocks related when some representatives are; closed reflexively
    and transitively."""
    if pi.n != P.n:
        raise IndexOutOfRange("partition size differs from poset size")
    k = len(pi.blocks)
    owner = {}
    for idx, blk in enumerate(pi.blocks):
        for x in blk:
            owner[x] = idx
    rel = [1 << a for a in range(k)]
    for i, j in P.relations():
        rel[owner[i]] |= 1 << owner[j]
    for m in range(k):
        mbit = 1 << m
        mrow = rel[m]
        for a in range(k):
            if rel[a] & mbit:
                rel[a] |= mrow
    return Preposet(k, rel)


def is_transverse(P: Poset, pi: SetPartition) -> bool:
    """Antichain blocks plus antisymmetric quotient."""
    if pi.n != P.n:
        raise IndexOutOfRange("partition size differs from poset size")
    for blk in pi.blocks:
        if not is_antichain(P, blk):
            return False
    return quotient_preposet(P, pi).is_antisymmetric()


def check_transverse(P: Poset, pi: SetPartition) -> None:
    if not is_transverse(P, pi):
        raise NotTransverse(f"{partition_to_text(pi)} is not transverse")


# -- layered enumeration ------------------------------------------------------

def _min_mask(down, alive):
    m = 0
    x = alive
    while x:
        low = x & -x
        v = low.bit_length() - 1
        if not down[v] & alive:
            m |= low
        x ^= low
    return m


def _layer_choices(min_mask, forbidden):
    """Partitions of each nonempty subset S of min_mask whose blocks all
    contain at least one vertex outside `forbidden`.

    Returns a list of (S_mask, blocks), blocks a tuple of sorted label tuples.
    """
    elems = [low.bit_length() - 1 for low in _low_bits(min_mask)]
    out = []

    def rec(idx, blocks, masks):
        if idx == len(elems):
            if blocks and all(m & ~forbidden for m in masks):
                s = 0
                for m in masks:
                    s |= m
                out.append((s, tuple(tuple(x + 1 for x in sorted(b)) for b in blocks)))
            return
        v = elems[idx]
        rec(idx + 1, blocks, masks)  # leave v out of the layer
        for b in range(len(blocks)):
            blocks[b].append(v)
            masks[b] |= 1 << v
            rec(idx + 1, blocks, masks)
            masks[b] ^= 1 << v
            blocks[b].pop()
        blocks.append([v])
        masks.append(1 << v)
        rec(idx + 1, blocks, masks)
        masks.pop()
        blocks.pop()

    rec(0, [], [])
    return out


def _low_bits(mask):
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def enumerate_transverse(P: Poset):
    """All partitions transverse to P, streamed without storing the family.

    Level recursion: a block is removable iff it sits inside min(P); blocks
    made only of minima left behind at the previous level can never become a
    deeper level's block, so they are forbidden, which kills double counting.
    """
    n = P.n
    down = P._down

    def rec(alive, forbidden):
        if not alive:
            yield ()
            return
        mm = _min_mask(down, alive)
        for s_mask, blocks in _layer_choices(mm, forbidden):
            rest_forbidden = mm & ~s_mask
            for tail in rec(alive & ~s_mask, rest_forbidden):
                yield blocks + tail

    for blocks in rec((1 << n) - 1, 0):
        yield SetPartition(n, blocks)


def transverse_poly_coeffs(P: Poset):
    """Coefficient list c with c[d] = sum of prod (|B|-1)! over transverse
    partitions having n - d blocks.  Memoized on (alive, forbidden) masks,
    which is what makes large chain-product posets feasible.
    """
    n = P.n
    down = P._down
    memo = {}

    def rec(alive, forbidden):
        if not alive:
            return (1,)
        key = (alive, forbidden)
        got = memo.get(key)
        if got is not None:
            return got
        mm = _min_mask(down, alive)
        acc = [0] * (bin(alive).count("1") + 1)
        for s_mask, blocks in _layer_choices(mm, forbidden):
            w = 1
            shift = 0
            for blk in blocks:
                w *= factorial(len(blk) - 1)
                shift += len(blk) - 1
            tail = rec(alive & ~s_mask, mm & ~s_mask)
            for d, c in enumerate(tail):
                if c:
                    acc[d + shift] += c * w
        while len(acc) > 1 and acc[-1] == 0:
            acc.pop()
        out = tuple(acc)
        memo[key] = out
        return out

    return list(rec((1 << n) - 1, 0))


def brute_force_transverse(P: Poset):
    """Filter the whole partition lattice (oracle; n <= 9 or so)."""
    return [pi for pi in all_partitions(P.n) if is_transverse(P, pi)]


def singleton_partition(n: int) -> SetPartition:
    return SetPartition(n, [[i] for i in range(1, n + 1)])


def partitions_of_set(elems):
    """All partitions of an explicit label set (helper for tests)."""
    elems = sorted(elems)
    if not elems:
        yield []
        return
    first, rest = elems[0], elems[1:]
    for sub in partitions_of_set(rest):
        yield [[first]] + [list(b) for b in sub]
        for i in range(len(sub)):
            out = [list(b) for b in sub]
            out[i].append(first)
            yield out


def antichain_blocks(P: Poset, pi: SetPartition) -> bool:
    return all(is_antichain(P, blk) for blk in pi.blocks)


def mobius_abs(pi: SetPartition) -> int:
    return pi.mobius_abs()


def transverse_count_check(P: Poset) -> bool:
    """Zaslavsky check: sum of |mu| over transverse partitions equals the
    number of linear extensions."""
    from .posets import count_linear_extensions

    total = sum(pi.mobius_abs() for pi in enumerate_transverse(P))
    return total == count_linear_extensions(P)
