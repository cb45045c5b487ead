"""Multiset permutations as two-line arrays and their prime factorizations.

A multiset permutation is stored column-wise with the top row weakly
increasing (canonical form); the implicit subscripts 1..n are the canonical
column positions.  Intercalation stably merges columns by top letter.  The
factorization walk repeatedly starts at the smallest letter with columns
left, steps top -> bottom peeking the leftmost unused column of each letter,
and cuts out the first revisited circuit; tail arcs stay for later factors.
"""

from __future__ import annotations

from collections import Counter, deque

from .errors import (
    IndexOutOfRange,
    NotLinearExtension,
    ParseError,
    SupportMismatch,
)
from .partitions import check_transverse
from .posets import count_linear_extensions, is_linear_extension, poset_from_relations, union_of_chains
from .bijections import Permutation


class MultisetPermutation:
    """Two-line array, columns sorted stably by top letter."""

    __slots__ = ("columns", "ell")

    def __init__(self, columns, ell=None):
        cols = sorted(tuple(columns), key=lambda c: c[0])
        for t, b in cols:
            if t < 1 or b < 1:
                raise ParseError("letters must be positive")
        top_counts = Counter(t for t, _ in cols)
        bot_counts = Counter(b for _, b in cols)
        if top_counts != bot_counts:
            raise SupportMismatch(
                f"rows carry different multisets: {dict(top_counts)} vs {dict(bot_counts)}"
            )
        mx = max((t for t, _ in cols), default=0)
        if ell is None:
            ell = mx
        elif ell < mx:
            raise SupportMismatch(f"letter {mx} exceeds declared alphabet 1..{ell}")
        self.columns = tuple(cols)
        self.ell = ell

    @classmethod
    def from_word(cls, word, support=None):
        """Bottom row against the sorted top row."""
        word = tuple(word)
        top = tuple(sorted(word))
        ell = len(support) if support is not None else None
        sigma = cls(zip(top, word), ell=ell)
        if support is not None:
            _check_support(sigma, support)
        return sigma

    @classmethod
    def from_rows(cls, top, bottom):
        top, bottom = tuple(top), tuple(bottom)
        if len(top) != len(bottom):
            raise ParseError("rows differ in length")
        if any(top[i] > top[i + 1] for i in range(len(top) - 1)):
            raise ParseError("top row must be weakly increasing")
        return cls(zip(top, bottom))

    @property
    def n(self):
        return len(self.columns)

    def support(self):
        """Multiplicity of each letter 1..ell."""
        counts = [0] * self.ell
        for t, _ in self.columns:
            counts[t - 1] += 1
        return tuple(counts)

    def top_row(self):
        return tuple(t for t, _ in self.columns)

    def bottom_row(self):
        return tuple(b for _, b in self.columns)

    def __eq__(self, other):
        if not isinstance(other, MultisetPermutation):
            return NotImplemented
        return self.columns == other.columns and self.ell == other.ell

    def __hash__(self):
        return hash((self.columns, self.ell))

    def __repr__(self):
        return f"MultisetPermutation({multiset_perm_to_text(self)!r})"


def _check_support(sigma, support):
    want = tuple(support)
    got = sigma.support()
    if len(got) < len(want):
        got = got + (0,) * (len(want) - len(got))
    if got != want or sigma.ell != len(want):
        raise SupportMismatch(f"support {got} differs from required {want}")


def multiset_perm_to_text(sigma: MultisetPermutation) -> str:
    """`top;bottom`, comma separated."""
    return (
        ",".join(str(t) for t in sigma.top_row())
        + ";"
        + ",".join(str(b) for b in sigma.bottom_row())
    )


def parse_multiset_perm(text: str, support=None) -> MultisetPermutation:
    """`1,1,2;2,1,1` two-line form, or a bare bottom word `2,1,1`."""
    s = text.strip()
    if ";" in s:
        top_s, bot_s = s.split(";", 1)
        try:
            top = [int(t) for t in top_s.replace(",", " ").split()]
            bottom = [int(t) for t in bot_s.replace(",", " ").split()]
        except ValueError:
            raise ParseError(f"bad two-line array {text!r}") from None
        sigma = MultisetPermutation.from_rows(top, bottom)
        if support is not None:
            sigma = MultisetPermutation(sigma.columns, ell=len(support))
            _check_support(sigma, support)
        return sigma
    try:
        word = [int(t) for t in s.replace(",", " ").split()]
    except ValueError:
        raise ParseError(f"bad word {text!r}") from None
    return MultisetPermutation.from_word(word, support=support)


def intercalation(rho: MultisetPermutation, tau: MultisetPermutation) -> MultisetPermutation:
    """Stable merge of columns by top letter; rho's columns go first within a
    letter."""
    return MultisetPermutation(
        rho.columns + tau.columns, ell=max(rho.ell, tau.ell)
    )


def intercalate_all(factors):
    out = MultisetPermutation((), ell=0)
    for f in factors:
        out = intercalation(out, f)
    return out


def is_prime(sigma: MultisetPermutation) -> bool:
    """Multiplicity-free support forming a single cycle."""
    if sigma.n == 0:
        return False
    counts = Counter(t for t, _ in sigma.columns)
    if any(c > 1 for c in counts.values()):
        return False
    succ = {t: b for t, b in sigma.columns}
    start = min(succ)
    x = succ[start]
    steps = 1
    while x != start:
        x = succ[x]
        steps += 1
    return steps == len(succ)


def _decompose_indexed(sigma):
    """Circuits of canonical column indices, in discovery order."""
    queues = {}
    for idx, (t, _) in enumerate(sigma.columns):
        queues.setdefault(t, deque()).append(idx)
    letters = sorted(queues)
    factors = []
    while True:
        start = next((t for t in letters if queues[t]), None)
        if start is None:
            return factors
        path = [start]
        seen = {start: 0}
        steps = []
        v = start
        while True:
            idx = queues[v][0]
            w = sigma.columns[idx][1]
            steps.append(idx)
            if w in seen:
                circuit = steps[seen[w]:]
                for cidx in circuit:
                    queues[sigma.columns[cidx][0]].popleft()
                factors.append(circuit)
                break
            seen[w] = len(path)
            path.append(w)
            v = w


def prime_decompose(sigma: MultisetPermutation):
    """Unique factorization into primes, in intercalation order."""
    return [
        MultisetPermutation(
            (sigma.columns[idx] for idx in circuit), ell=sigma.ell
        )
        for circuit in _decompose_indexed(sigma)
    ]


def fcyc(sigma: MultisetPermutation) -> int:
    return len(_decompose_indexed(sigma))


def dependence_poset(factors):
    """Factor i must precede factor j when their letter supports intersect."""
    k = len(factors)
    supports = [set(t for t, _ in f.columns) for f in factors]
    pairs = [
        (i + 1, j + 1)
        for i in range(k)
        for j in range(i + 1, k)
        if supports[i] & supports[j]
    ]
    return poset_from_relations(k, pairs, max_n=None)


def factorization_count(sigma: MultisetPermutation) -> int:
    """Number of distinct orderings of the prime factors whose intercalation
    returns sigma."""
    return count_linear_extensions(dependence_poset(prime_decompose(sigma)))


# -- words of disjoint chains --------------------------------------------------

def _chain_letters(a):
    letters = []
    for j, aj in enumerate(a, start=1):
        letters.extend([j] * aj)
    return letters


def multiset_encode(a, lam) -> MultisetPermutation:
    """Linear extension of standardized disjoint chains -> bottom word of
    chain letters."""
    P = union_of_chains(a)
    lam = tuple(lam)
    if not is_linear_extension(P, lam):
        raise NotLinearExtension(f"{list(lam)} is not a linear extension")
    letter = _chain_letters(a)
    return MultisetPermutation.from_word(
        (letter[x - 1] for x in lam), support=tuple(a)
    )


def multiset_decode(a, sigma: MultisetPermutation):
    """k-th occurrence of letter j in the bottom row -> k-th label of chain j."""
    _check_support(sigma, tuple(a))
    offsets = [0] * (len(a) + 1)
    for j, aj in enumerate(a, start=1):
        offsets[j] = offsets[j - 1] + aj
    cnt = [0] * (len(a) + 1)
    word = []
    for b in sigma.bottom_row():
        cnt[b] += 1
        word.append(offsets[b - 1] + cnt[b])
    return tuple(word)


def enumerate_multiset_perms(a):
    """All multiset permutations with the given support, bottom rows in lex
    order."""
    n = sum(a)
    counts = list(a)
    word = []

    def rec():
        if len(word) == n:
            yield MultisetPermutation.from_word(word, support=tuple(a))
            return
        for j in range(1, len(a) + 1):
            if counts[j - 1]:
                counts[j - 1] -= 1
                word.append(j)
                yield from rec()
                word.pop()
                counts[j - 1] += 1

    yield from rec()


# -- the cycle bijection --------------------------------------------------------

def foata_phi(a, lam) -> Permutation:
    """Permutation of canonical column positions: position i maps to the
    position, within its prime factor, of the column topped by i's bottom
    letter."""
    sigma = multiset_encode(a, lam)
    images = [0] * sigma.n
    for circuit in _decompose_indexed(sigma):
        pos_of_top = {sigma.columns[idx][0]: idx + 1 for idx in circuit}
        for idx in circuit:
            images[idx] = pos_of_top[sigma.columns[idx][1]]
    return Permutation(images)


def foata_phi_inv(a, tau: Permutation):
    """Inverse: the canonical top row is the sorted chain-letter word, so
    column i of the preimage has bottom letter top(tau(i))."""
    n = sum(a)
    if tau.n != n:
        raise IndexOutOfRange(f"permutation size {tau.n} differs from {n}")
    P = union_of_chains(a)
    check_transverse(P, tau.cycle_partition())
    top = sorted(_chain_letters(a))
    bottom = [top[tau(i) - 1] for i in range(1, n + 1)]
    sigma = MultisetPermutation.from_word(bottom, support=tuple(a))
    return multiset_decode(a, sigma)
