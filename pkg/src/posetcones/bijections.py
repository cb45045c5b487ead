"""Bijections between linear extensions and cycle-type objects.

phi sends a permutation with transverse cycle partition to the linear
extension obtained by writing each cycle from its leading essential element
and concatenating cycles by (quotient level, leading element).  psi inverts
it by cutting a linear extension at its poset-left-to-right maxima.  omega is
the width-2 bijection onto transverse partitions matching chain-crossing
descents with two-element blocks.
"""

from __future__ import annotations

from itertools import permutations, product

from .errors import (
    IndexOutOfRange,
    NotLinearExtension,
    NotTransverse,
    ParseError,
)
from .partitions import (
    SetPartition,
    check_transverse,
    enumerate_transverse,
    quotient_preposet,
)
from .posets import Poset, is_linear_extension


class Permutation:
    """Permutation of {1..n}; images[i] is the image of i+1."""

    __slots__ = ("n", "images")

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise ParseError(f"not a permutation of 1..{n}: {images}")
        self.n = n
        self.images = images

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, n, cycles, implicit_fixed=False):
        images = [0] * n
        seen = set()
        for cyc in cycles:
            cyc = tuple(cyc)
            for x in cyc:
                if not 1 <= x <= n:
                    raise IndexOutOfRange(f"label {x} outside 1..{n}")
                if x in seen:
                    raise ParseError(f"label {x} in two cycles")
                seen.add(x)
            for idx, x in enumerate(cyc):
                images[x - 1] = cyc[(idx + 1) % len(cyc)]
        for x in range(1, n + 1):
            if x not in seen:
                if not implicit_fixed:
                    raise ParseError(f"label {x} missing from cycles")
                images[x - 1] = x
        return cls(images)

    def __call__(self, x: int) -> int:
        if not 1 <= x <= self.n:
            raise IndexOutOfRange(f"label {x} outside 1..{self.n}")
        return self.images[x - 1]

    def cycles(self):
        """Orbits, each starting at its smallest element, sorted by that."""
        seen = set()
        out = []
        for s in range(1, self.n + 1):
            if s in seen:
                continue
            orbit = [s]
            seen.add(s)
            x = self.images[s - 1]
            while x != s:
                orbit.append(x)
                seen.add(x)
                x = self.images[x - 1]
            out.append(tuple(orbit))
        return out

    def cycle_count(self) -> int:
        return len(self.cycles())

    def cycle_partition(self) -> SetPartition:
        return SetPartition(self.n, self.cycles())

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)})"


def permutation_to_text(p: Permutation, cycles: bool = False) -> str:
    if not cycles:
        return "[" + ",".join(str(x) for x in p.images) + "]"
    if p.n == 0:
        return "()"
    return "".join("(" + ",".join(str(x) for x in c) + ")" for c in p.cycles())


def parse_permutation(text: str, n=None, implicit_fixed=False) -> Permutation:
    """`[3,1,2]` or bare `3,1,2` one-line; `(1,3)(2)` cycle form."""
    s = text.strip()
    if not s or s == "()" or s == "[]":
        return Permutation(())
    if s.startswith("("):
        cycles = []
        rest = s
        while rest:
            if not rest.startswith("("):
                raise ParseError(f"bad cycle text at {rest!r}")
            close = rest.find(")")
            if close < 0:
                raise ParseError("unclosed cycle")
            body = rest[1:close].strip()
            if body:
                try:
                    cycles.append([int(t) for t in body.replace(",", " ").split()])
                except ValueError:
                    raise ParseError(f"bad cycle {body!r}") from None
            rest = rest[close + 1:].strip()
        labels = [x for c in cycles for x in c]
        size = n if n is not None else (max(labels) if labels else 0)
        return Permutation.from_cycles(size, cycles, implicit_fixed=implicit_fixed)
    body = s[1:-1] if s.startswith("[") and s.endswith("]") else s
    try:
        images = [int(t) for t in body.replace(",", " ").split()]
    except ValueError:
        raise ParseError(f"bad one-line permutation {text!r}") from None
    if n is not None and len(images) != n:
        raise ParseError(f"expected {n} entries, got {len(images)}")
    return Permutation(images)


# -- the transverse family as permutations ------------------------------------

def transverse_permutations(P: Poset):
    """All permutations whose cycle partition is transverse to P; grouped by
    partition, cyclic arrangements in lex order of the rotated tail."""
    for pi in enumerate_transverse(P):
        per_block = []
        for blk in pi.blocks:
            first, rest = blk[0], blk[1:]
            per_block.append([(first,) + tail for tail in permutations(rest)])
        for combo in product(*per_block):
            yield Permutation.from_cycles(P.n, combo)


def _quotient_level_list(P, pi):
    """Longest-chain height of each block in the quotient (1-based levels)."""
    Q = quotient_preposet(P, pi)
    k = Q.k
    memo = {}

    def height(b):
        got = memo.get(b)
        if got is not None:
            return got
        best = 1
        for a in range(k):
            if a != b and Q.rel[a] >> b & 1:
                h = height(a) + 1
                if h > best:
                    best = h
        memo[b] = best
        return best

    return [height(b) for b in range(k)]


def levels_of_permutation(P: Poset, tau: Permutation):
    """Block -> quotient level of the cycle partition; NotTransverse if that
    partition is not transverse."""
    pi = tau.cycle_partition()
    check_transverse(P, pi)
    lv = _quotient_level_list(P, pi)
    return {blk: lv[bi] for bi, blk in enumerate(pi.blocks)}


def phi(P: Poset, tau: Permutation):
    """Standard-form word: each cycle written from its leading essential
    element, cycles sorted by (level, leading element)."""
    level = {}
    for blk, lv in levels_of_permutation(P, tau).items():
        for x in blk:
            level[x] = lv
    n = P.n
    essential = _essential_set(P, level)
    keyed = []
    for cyc in tau.cycles():
        ess = [x for x in cyc if x in essential]
        if not ess:
            raise NotTransverse(f"cycle {cyc} has no essential element")
        lead = max(ess)
        at = cyc.index(lead)
        word = cyc[at:] + cyc[:at]
        keyed.append(((level[lead], lead), word))
    keyed.sort(key=lambda kw: kw[0])
    out = []
    for _, word in keyed:
        out.extend(word)
    return tuple(out)


def _essential_set(P, level):
    ess = set()
    for x, lx in level.items():
        if lx == 1:
            ess.add(x)
            continue
        for y, ly in level.items():
            if ly == lx - 1 and P.less(y, x):
                ess.add(x)
                break
    return ess


class LeveledExtension:
    """Greedy level split of a linear extension with its cycle openers."""

    __slots__ = ("word", "levels", "level_of", "essential", "plr_max")

    def __init__(self, word, levels, level_of, essential, plr_max):
        self.word = word
        self.levels = levels
        self.level_of = level_of
        self.essential = essential
        self.plr_max = plr_max

    def __repr__(self):
        return (
            f"LeveledExtension(word={self.word}, levels={self.levels}, "
            f"plr_max={self.plr_max})"
        )


def level_decompose(P: Poset, sigma) -> LeveledExtension:
    """Levels are maximal antichain prefixes read greedily left to right; an
    element is essential on level one, or when it lies above something one
    level down; the LR maxima are the running maxima of the essential
    subsequence within each level."""
    word = tuple(sigma)
    if not is_linear_extension(P, word):
        raise NotLinearExtension(f"{list(word)} is not a linear extension")
    levels = []
    cur = []
    for x in word:
        if any(P.less(y, x) for y in cur):
            levels.append(tuple(cur))
            cur = [x]
        else:
            cur.append(x)
    if cur:
        levels.append(tuple(cur))
    level_of = {}
    for li, lv in enumerate(levels, start=1):
        for x in lv:
            level_of[x] = li
    essential = set()
    for li, lv in enumerate(levels, start=1):
        for x in lv:
            if li == 1 or any(P.less(y, x) for y in levels[li - 2]):
                essential.add(x)
    plr_max = []
    for lv in levels:
        runm = 0
        for x in lv:
            if x in essential:
                if x > runm:
                    plr_max.append(x)
                    runm = x
    return LeveledExtension(word, tuple(levels), level_of, frozenset(essential), tuple(plr_max))


def psi(P: Poset, sigma) -> Permutation:
    """Cut the word before each LR maximum; each segment becomes a cycle."""
    le = level_decompose(P, sigma)
    ops = set(le.plr_max)
    cycles = []
    cur = []
    for x in le.word:
        if x in ops:
            if cur:
                cycles.append(cur)
            cur = [x]
        else:
            cur.append(x)
    if cur:
        cycles.append(cur)
    return Permutation.from_cycles(P.n, cycles)


def lrmax_count(P: Poset, sigma) -> int:
    return len(level_decompose(P, sigma).plr_max)


# -- width-2 descent bijection -------------------------------------------------

def des_p1p2(P: Poset, d, sigma) -> int:
    """Descents of sigma that fall from chain 2 to an incomparable chain-1
    element."""
    word = tuple(sigma)
    if not is_linear_extension(P, word):
        raise NotLinearExtension(f"{list(word)} is not a linear extension")
    k = 0
    for i in range(len(word) - 1):
        x, y = word[i], word[i + 1]
        if d.side(x) == 2 and d.side(y) == 1 and not P.comparable(x, y):
            k += 1
    return k


def _alive_minima(P, alive):
    out = []
    for v in range(P.n):
        if alive >> v & 1 and not P._down[v] & alive:
            out.append(v + 1)
    return out


def omega(P: Poset, d, sigma) -> SetPartition:
    """Width-2 bijection from linear extensions onto transverse partitions;
    two-element blocks land exactly on the chain-crossing descents."""
    word = tuple(sigma)
    if not is_linear_extension(P, word):
        raise NotLinearExtension(f"{list(word)} is not a linear extension")
    n = P.n
    blocks = []
    alive = (1 << n) - 1
    idx = 0
    while idx < n:
        mins = _alive_minima(P, alive)
        if len(mins) == 1:
            m = word[idx]
            blocks.append((m,))
            alive &= ~(1 << (m - 1))
            idx += 1
            continue
        p1 = next(m for m in mins if d.side(m) == 1)
        if word[idx] == p1:
            blocks.append((p1,))
            alive &= ~(1 << (p1 - 1))
            idx += 1
            continue
        j = word.index(p1, idx)
        for k in range(idx, j - 1):
            blocks.append((word[k],))
            alive &= ~(1 << (word[k] - 1))
        blocks.append(tuple(sorted((word[j - 1], p1))))
        alive &= ~(1 << (word[j - 1] - 1))
        alive &= ~(1 << (p1 - 1))
        idx = j + 1
    return SetPartition(n, blocks)


def omega_inv(P: Poset, d, pi: SetPartition):
    """Rebuild the word: paired blocks force the chain-2 run below the partner,
    then the partner, then the chain-1 minimum."""
    if pi.n != P.n:
        raise IndexOutOfRange("partition size differs from poset size")
    check_transverse(P, pi)
    block_of = {}
    for blk in pi.blocks:
        for x in blk:
            block_of[x] = blk
    word = []
    alive = (1 << P.n) - 1

    def emit(x):
        nonlocal alive
        word.append(x)
        alive &= ~(1 << (x - 1))

    while alive:
        mins = _alive_minima(P, alive)
        if len(mins) == 1:
            m = mins[0]
            if block_of[m] != (m,):
                raise NotTransverse(f"block of {m} pairs across a level")
            emit(m)
            continue
        p1 = next(m for m in mins if d.side(m) == 1)
        blk = block_of[p1]
        if blk == (p1,):
            emit(p1)
            continue
        x = blk[0] if blk[1] == p1 else blk[1]
        for y in d.p2:
            if y == x:
                break
            if alive >> (y - 1) & 1:
                if block_of[y] != (y,):
                    raise NotTransverse(f"block of {y} conflicts with {blk}")
                emit(y)
        emit(x)
        emit(p1)
    return tuple(word)
