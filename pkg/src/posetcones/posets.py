"""Finite strict posets on labels {1..n}.

Relation rows are bit-packed into Python ints (bit j of up[i] set iff i < j in
P, 0-based internally; every public surface speaks 1-based labels).  Closure
is Warshall on masks.  The soft size guard max_n=64 mirrors the word-size cap
a C implementation would have; it is overridable since Python masks are not
actually bounded.
"""

from __future__ import annotations

import random
from itertools import permutations

from .errors import (
    CycleDetected,
    IndexOutOfRange,
    NotDisjointChains,
    ParseError,
    WidthExceeded,
)

DEFAULT_MAX_N = 64


class Poset:
    """Immutable transitively-closed strict partial order on {1..n}."""

    __slots__ = ("n", "_up", "_down")

    def __init__(self, n, up_rows, down_rows):
        self.n = n
        self._up = tuple(up_rows)
        self._down = tuple(down_rows)

    # -- queries (1-based) --------------------------------------------------

    def less(self, i: int, j: int) -> bool:
        """True iff i <_P j (strict)."""
        self._check_label(i)
        self._check_label(j)
        return bool(self._up[i - 1] >> (j - 1) & 1)

    def comparable(self, i: int, j: int) -> bool:
        return i != j and (self.less(i, j) or self.less(j, i))

    def relations(self):
        """All strict pairs (i, j) with i <_P j, sorted."""
        out = []
        for i in range(self.n):
            row = self._up[i]
            j = 0
            while row:
                if row & 1:
                    out.append((i + 1, j + 1))
                row >>= 1
                j += 1
        return out

    def covers(self):
        """Cover pairs (i, j): i <_P j with nothing strictly between."""
        out = []
        for i in range(self.n):
            row = self._up[i]
            for j in _bits(row):
                if not row & self._down[j]:
                    out.append((i + 1, j + 1))
        return sorted(out)

    def minimal_elements(self):
        return [i + 1 for i in range(self.n) if not self._down[i]]

    def maximal_elements(self):
        return [i + 1 for i in range(self.n) if not self._up[i]]

    def _check_label(self, i):
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"label {i} outside 1..{self.n}")

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.n == other.n and self._up == other._up

    def __hash__(self):
        return hash((self.n, self._up))

    def __repr__(self):
        return f"Poset(n={self.n}, covers={self.covers()})"


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def poset_from_relations(n, pairs, max_n=DEFAULT_MAX_N) -> Poset:
    """Transitive closure of the strict pairs; rejects cycles and bad labels."""
    if n < 0:
        raise IndexOutOfRange("n must be nonnegative")
    if max_n is not None and n > max_n:
        raise IndexOutOfRange(f"n={n} exceeds the size guard {max_n}")
    up = [0] * n
    for i, j in pairs:
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexOutOfRange(f"relation ({i},{j}) outside 1..{n}")
        if i == j:
            raise CycleDetected(f"self-relation at {i}")
        up[i - 1] |= 1 << (j - 1)
    for k in range(n):
        kbit = 1 << k
        krow = up[k]
        for i in range(n):
            if up[i] & kbit:
                up[i] |= krow
    for i in range(n):
        if up[i] >> i & 1:
            raise CycleDetected(f"closure puts {i + 1} below itself")
    down = [0] * n
    for i in range(n):
        for j in _bits(up[i]):
            down[j] |= 1 << i
    return Poset(n, up, down)


# -- constructors -----------------------------------------------------------

def chain(n: int) -> Poset:
    return poset_from_relations(n, [(i, i + 1) for i in range(1, n)])


def antichain(n: int) -> Poset:
    return poset_from_relations(n, [])


def union_of_chains(a) -> Poset:
    """Disjoint chains; chain i holds labels a1+..+a_{i-1}+1 .. a1+..+a_i,
    increasing bottom-to-top (the standardized labeling)."""
    pairs = []
    base = 0
    for ai in a:
        if ai < 0:
            raise IndexOutOfRange("chain lengths must be nonnegative")
        pairs.extend((base + k, base + k + 1) for k in range(1, ai))
        base += ai
    return poset_from_relations(base, pairs)


def grid(rows: int, cols: int) -> Poset:
    """Chain(rows) x Chain(cols), labeled row-major so row 1 is 1..cols.

    (r, c) < (r', c') iff r <= r', c <= c', not equal.  With two rows this is
    the natural labeling whose first row is an order ideal.
    """
    n = rows * cols
    pairs = []
    for r in range(rows):
        for c in range(cols):
            lab = r * cols + c + 1
            if c + 1 < cols:
                pairs.append((lab, lab + 1))
            if r + 1 < rows:
                pairs.append((lab, lab + cols))
    return poset_from_relations(n, pairs, max_n=max(DEFAULT_MAX_N, n))


def opposite(P: Poset) -> Poset:
    return Poset(P.n, P._down, P._up)


def ordinal_sum(P1: Poset, P2: Poset) -> Poset:
    """Everything of P1 below everything of P2; P2 labels shifted by n1."""
    n1, n2 = P1.n, P2.n
    pairs = P1.relations()
    pairs += [(i + n1, j + n1) for i, j in P2.relations()]
    pairs += [(i, j + n1) for i in range(1, n1 + 1) for j in range(1, n2 + 1)]
    return poset_from_relations(n1 + n2, pairs, max_n=max(DEFAULT_MAX_N, n1 + n2))


def induced(P: Poset, labels) -> Poset:
    """Subposet on the given labels, relabeled 1..k in increasing label order."""
    labs = sorted(labels)
    pos = {lab: idx + 1 for idx, lab in enumerate(labs)}
    pairs = [
        (pos[i], pos[j])
        for i in labs
        for j in labs
        if i != j and P.less(i, j)
    ]
    return poset_from_relations(len(labs), pairs)


def random_poset(n: int, p: float, rng: random.Random) -> Poset:
    """Each upward pair (i,j), i<j, kept with probability p, then closed.
    Upward-only sampling cannot create cycles (biases toward natural labelings)."""
    pairs = [
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if rng.random() < p
    ]
    return poset_from_relations(n, pairs)


# -- linear extensions ------------------------------------------------------

def linear_extensions(P: Poset):
    """All linear extensions, lexicographically smallest word first.

    Backtracks over currently-minimal elements in increasing label order.
    """
    n = P.n
    down = P._down
    word = []
    full = (1 << n) - 1

    def rec(placed):
        if placed == full:
            yield tuple(x + 1 for x in word)
            return
        for v in range(n):
            b = 1 << v
            if placed & b or down[v] & ~placed:
                continue
            word.append(v)
            yield from rec(placed | b)
            word.pop()

    if n == 0:
        yield ()
        return
    yield from rec(0)


def is_linear_extension(P: Poset, word) -> bool:
    n = P.n
    if len(word) != n or sorted(word) != list(range(1, n + 1)):
        return False
    placed = 0
    for x in word:
        v = x - 1
        if P._down[v] & ~placed:
            return False
        placed |= 1 << v
    return True


def count_linear_extensions(P: Poset) -> int:
    """Exact count by DP over down-set masks (memo keyed by placed-mask)."""
    n = P.n
    down = P._down
    full = (1 << n) - 1
    memo = {full: 1}

    def rec(placed):
        val = memo.get(placed)
        if val is not None:
            return val
        total = 0
        for v in range(n):
            b = 1 << v
            if placed & b or down[v] & ~placed:
                continue
            total += rec(placed | b)
        memo[placed] = total
        return total

    return rec(0)


# -- width and chain covers -------------------------------------------------

def _matching_chain_cover(P: Poset):
    """Minimum chain cover via Kuhn matching on the comparability DAG.

    Left vertices scanned in increasing label; augmenting paths try right
    vertices in increasing label, so the cover is deterministic.
    """
    n = P.n
    up = P._up
    match_left = [-1] * n   # right j -> left i
    match_right = [-1] * n  # left i -> right j

    def try_augment(i, seen):
        row = up[i]
        for j in _bits(row):
            if seen & (1 << j):
                continue
            seen |= 1 << j
            if match_left[j] < 0:
                match_left[j] = i
                match_right[i] = j
                return True, seen
            ok, seen = try_augment(match_left[j], seen)
            if ok:
                match_left[j] = i
                match_right[i] = j
                return True, seen
        return False, seen

    for i in range(n):
        try_augment(i, 0)

    chains = []
    starts = [i for i in range(n) if match_left[i] < 0]
    for s in starts:
        c = [s + 1]
        while match_right[s] >= 0:
            s = match_right[s]
            c.append(s + 1)
        chains.append(tuple(c))
    chains.sort(key=lambda c: c[0])
    return chains


def width(P: Poset) -> int:
    """Maximum antichain size = minimum chain cover size (Dilworth)."""
    return max(1, len(_matching_chain_cover(P))) if P.n else 0


class ChainDecomposition:
    """Ordered pair of disjoint chains covering {1..n}; either may be empty."""

    __slots__ = ("p1", "p2", "_s1", "_s2")

    def __init__(self, P: Poset, part1, part2):
        s1, s2 = frozenset(part1), frozenset(part2)
        if s1 & s2 or len(s1) + len(s2) != P.n or (s1 | s2) != set(range(1, P.n + 1)):
            raise WidthExceeded("parts must partition {1..n}")
        for part in (s1, s2):
            for i in part:
                for j in part:
                    if i < j and not P.comparable(i, j):
                        raise WidthExceeded(f"part is not a chain: {i} and {j} incomparable")
        self.p1 = _chain_order(P, s1)
        self.p2 = _chain_order(P, s2)
        self._s1, self._s2 = s1, s2

    def side(self, x: int) -> int:
        """1 or 2."""
        return 1 if x in self._s1 else 2

    def __repr__(self):
        return f"ChainDecomposition(p1={self.p1}, p2={self.p2})"


def _chain_order(P, part):
    return tuple(sorted(part, key=lambda x: sum(1 for y in part if y != x and P.less(y, x))))


def chain_cover_width2(P: Poset) -> ChainDecomposition:
    """Deterministic 2-chain partition; WidthExceeded if width(P) > 2."""
    chains = _matching_chain_cover(P)
    if len(chains) > 2:
        raise WidthExceeded(f"width {len(chains)} > 2")
    while len(chains) < 2:
        chains.append(())
    return ChainDecomposition(P, chains[0], chains[1])


def is_antichain(P: Poset, S) -> bool:
    S = list(S)
    for idx, i in enumerate(S):
        for j in S[idx + 1:]:
            if P.comparable(i, j):
                return False
    return True


def disjoint_chain_lengths(P: Poset):
    """Chain lengths when P is a standardized union of chains: each chain
    holds consecutive labels increasing bottom to top, chains in label order.
    NotDisjointChains otherwise."""
    n = P.n
    lengths = []
    base = 0
    while base < n:
        v = base  # 0-based; chain must start at base+1
        if P._down[v]:
            raise NotDisjointChains(f"label {v + 1} is not a chain bottom")
        length = 1
        while P._up[v]:
            if P._up[v] != _up_segment(v + 1, P._up[v]):
                raise NotDisjointChains(
                    f"labels above {v + 1} are not the consecutive run expected"
                )
            v += 1
            length += 1
        lengths.append(length)
        base += length
    return tuple(lengths)


def _up_segment(start, mask):
    """Mask of the consecutive bits start..start+k-1 where k = popcount."""
    k = bin(mask).count("1")
    return ((1 << k) - 1) << start


def brute_force_width(P: Poset) -> int:
    """Largest pairwise-incomparable subset, by subset enumeration (oracle)."""
    best = 0
    n = P.n
    for mask in range(1 << n):
        S = [i + 1 for i in range(n) if mask >> i & 1]
        if len(S) > best and is_antichain(P, S):
            best = len(S)
    return best


def brute_force_extensions(P: Poset):
    """Filter all n! words (oracle for n <= 7)."""
    return [w for w in permutations(range(1, P.n + 1)) if is_linear_extension(P, w)]


# -- text format --------------------------------------------------------------

def parse_poset(text: str, max_n=DEFAULT_MAX_N) -> Poset:
    """Lines: `n <count>` then `rel <i> <j>`; '#' starts a comment."""
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if tok[0] == "n":
            if n is not None:
                raise ParseError(f"line {lineno}: duplicate n line")
            if len(tok) != 2 or not tok[1].isdigit():
                raise ParseError(f"line {lineno}: expected `n <count>`")
            n = int(tok[1])
        elif tok[0] == "rel":
            if n is None:
                raise ParseError(f"line {lineno}: rel before n")
            try:
                i, j = int(tok[1]), int(tok[2])
            except (IndexError, ValueError):
                raise ParseError(f"line {lineno}: expected `rel <i> <j>`") from None
            if len(tok) != 3:
                raise ParseError(f"line {lineno}: expected `rel <i> <j>`")
            pairs.append((i, j))
        else:
            raise ParseError(f"line {lineno}: unknown directive {tok[0]!r}")
    if n is None:
        raise ParseError("missing `n <count>` line")
    try:
        return poset_from_relations(n, pairs, max_n=max_n)
    except (CycleDetected, IndexOutOfRange) as exc:
        raise ParseError(str(exc)) from exc


def poset_to_text(P: Poset) -> str:
    """Canonical form: size line plus cover relations sorted by (i, j)."""
    lines = [f"n {P.n}"]
    lines += [f"rel {i} {j}" for i, j in P.covers()]
    return "\n".join(lines) + "\n"
