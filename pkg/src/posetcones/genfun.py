"""Multivariate generating function for disjoint-chain cone polynomials.

Series live in Z[t][[x_1..x_ell]] truncated at a total degree cap, stored
sparsely as exponent tuple -> coefficient polynomial.  The master identity
inverts 1 minus a bracket-weighted sum of elementary symmetric polynomials;
geometric summation is exact below the cap because the inverted part has no
constant term.
"""

from __future__ import annotations

from itertools import combinations

from .errors import DegreeExceeded
from .polynomials import IntPolynomial


class TruncatedSeries:
    """Sparse truncated series; terms map exponent tuples to polynomials."""

    __slots__ = ("ell", "cap", "terms")

    def __init__(self, ell, cap, terms=None):
        self.ell = ell
        self.cap = cap
        self.terms = {}
        if terms:
            for exps, poly in terms.items():
                if sum(exps) <= cap and poly:
                    self.terms[tuple(exps)] = poly

    @classmethod
    def zero(cls, ell, cap):
        return cls(ell, cap)

    @classmethod
    def one(cls, ell, cap):
        return cls(ell, cap, {(0,) * ell: IntPolynomial.one()})

    @classmethod
    def monomial(cls, ell, cap, exps, poly=None):
        return cls(ell, cap, {tuple(exps): poly if poly is not None else IntPolynomial.one()})

    def __add__(self, other):
        out = dict(self.terms)
        for exps, poly in other.terms.items():
            got = out.get(exps)
            s = poly if got is None else got + poly
            if s:
                out[exps] = s
            elif got is not None:
                del out[exps]
        return TruncatedSeries(self.ell, self.cap, out)

    def __sub__(self, other):
        return self + other.scaled(IntPolynomial([-1]))

    def scaled(self, poly: IntPolynomial):
        return TruncatedSeries(
            self.ell, self.cap,
            {exps: p * poly for exps, p in self.terms.items()},
        )

    def __mul__(self, other):
        out = {}
        for e1, p1 in self.terms.items():
            d1 = sum(e1)
            for e2, p2 in other.terms.items():
                if d1 + sum(e2) > self.cap:
                    continue
                key = tuple(a + b for a, b in zip(e1, e2))
                prod = p1 * p2
                got = out.get(key)
                s = prod if got is None else got + prod
                if s:
                    out[key] = s
                elif got is not None:
                    del out[key]
        return TruncatedSeries(self.ell, self.cap, out)

    def inverse(self):
        """Geometric inverse; the constant coefficient must be exactly 1."""
        const = self.terms.get((0,) * self.ell)
        if const != IntPolynomial.one():
            raise ValueError("inverse needs constant coefficient 1")
        s = TruncatedSeries.one(self.ell, self.cap) - self
        acc = TruncatedSeries.one(self.ell, self.cap)
        for _ in range(self.cap):
            acc = TruncatedSeries.one(self.ell, self.cap) + s * acc
        return acc

    def coefficient(self, exps) -> IntPolynomial:
        exps = tuple(exps)
        if len(exps) != self.ell:
            raise DegreeExceeded(f"expected {self.ell} exponents, got {len(exps)}")
        if sum(exps) > self.cap:
            raise DegreeExceeded(f"total degree {sum(exps)} beyond cap {self.cap}")
        return self.terms.get(exps, IntPolynomial.zero())

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.ell, self.cap, self.terms) == (other.ell, other.cap, other.terms)

    def __repr__(self):
        return f"TruncatedSeries(ell={self.ell}, cap={self.cap}, nterms={len(self.terms)})"


def elementary_symmetric(ell, j, cap) -> TruncatedSeries:
    terms = {}
    if 0 <= j <= ell and j <= cap:
        for subset in combinations(range(ell), j):
            exps = [0] * ell
            for i in subset:
                exps[i] = 1
            terms[tuple(exps)] = IntPolynomial.one()
    return TruncatedSeries(ell, cap, terms)


def falling_bracket(j) -> IntPolynomial:
    """prod_{i=1}^{j-1} (i t - 1); empty product for j = 1."""
    out = IntPolynomial.one()
    for i in range(1, j):
        out = out * IntPolynomial([-1, i])
    return out


def mmt_bracket(j) -> IntPolynomial:
    """prod_{i=0}^{j-1} (i - t)."""
    out = IntPolynomial.one()
    for i in range(j):
        out = out * IntPolynomial([i, -1])
    return out


def chains_gf_rhs(ell, cap) -> TruncatedSeries:
    """(1 - sum_j falling_bracket(j) e_j)^{-1}; the x^a coefficient is the
    cone polynomial of disjoint chains with multiplicities a."""
    body = TruncatedSeries.one(ell, cap)
    for j in range(1, min(ell, cap) + 1):
        body = body - elementary_symmetric(ell, j, cap).scaled(falling_bracket(j))
    return body.inverse()


def tmmt_rhs(ell, cap) -> TruncatedSeries:
    """(1 + sum_j mmt_bracket(j) e_j)^{-1}; the x^a coefficient is the factor
    count distribution sum_sigma t^fcyc over words with support a."""
    body = TruncatedSeries.one(ell, cap)
    for j in range(1, min(ell, cap) + 1):
        body = body + elementary_symmetric(ell, j, cap).scaled(mmt_bracket(j))
    return body.inverse()


def _compositions_upto(ell, cap):
    """All exponent tuples with nonnegative parts and total at most cap, in
    lex order."""
    out = []

    def rec(prefix, left):
        if len(prefix) == ell:
            out.append(tuple(prefix))
            return
        for v in range(left + 1):
            rec(prefix + [v], left - v)

    rec([], cap)
    return out


def coefficient(S: TruncatedSeries, a) -> IntPolynomial:
    return S.coefficient(a)


def verify_chains_gf(ell, cap):
    """Compare every coefficient of the inverted series against the transverse
    route on the matching disjoint-chain poset; zero parts just drop chains.

    Returns (a, coefficient, matches) triples in lex order of a.
    """
    from .posets import union_of_chains
    from .whitney import poincare_via_transverse

    rhs = chains_gf_rhs(ell, cap)
    report = []
    for a in _compositions_upto(ell, cap):
        got = rhs.coefficient(a)
        want = poincare_via_transverse(union_of_chains([x for x in a if x]))
        report.append((a, got, got == want))
    return report


def fcyc_distribution(a) -> IntPolynomial:
    """sum over words with support a of t^(number of prime factors)."""
    from .foata import enumerate_multiset_perms, fcyc

    coeffs = [0] * (sum(a) + 1)
    for sigma in enumerate_multiset_perms(a):
        coeffs[fcyc(sigma)] += 1
    return IntPolynomial(coeffs)


def stirling_first_kind_row(n):
    """Unsigned Stirling numbers c(n, 0..n) by the standard recurrence."""
    row = [1]
    for m in range(1, n + 1):
        nxt = [0] * (m + 1)
        for k in range(m):
            nxt[k] += (m - 1) * row[k]
            nxt[k + 1] += row[k]
        row = nxt
    return row


def _cycle_count_census(n):
    """Row c(n, 0..n) counted directly over all n! permutations."""
    from itertools import permutations

    row = [0] * (n + 1)
    for perm in permutations(range(n)):
        seen = [False] * n
        cycles = 0
        for s in range(n):
            if seen[s]:
                continue
            cycles += 1
            x = s
            while not seen[x]:
                seen[x] = True
                x = perm[x]
        row[cycles] += 1
    return row


def stirling_row_check(n) -> bool:
    """True when the antichain cone polynomial equals prod (1 + kt) and its
    reversed coefficients match the cycle-count row (census up to n = 7, the
    two-term recurrence beyond)."""
    from .posets import antichain
    from .whitney import poincare_via_lrmax

    got = poincare_via_lrmax(antichain(n))
    prod = IntPolynomial.one()
    for k in range(1, n):
        prod = prod * IntPolynomial([1, k])
    row = _cycle_count_census(n) if n <= 7 else stirling_first_kind_row(n)
    want = [0] * (n + 1)
    for k in range(n + 1):
        want[n - k] = row[k]
    return got == prod and got == IntPolynomial(want)
