"""Domain errors. Every precondition in the public API maps to one of these."""


class PosetconesError(Exception):
    """Base class so callers can catch the whole family at once."""


class CycleDetected(PosetconesError):
    """Transitive closure of the given relations violates antisymmetry."""


class IndexOutOfRange(PosetconesError):
    """A label falls outside {1..n}."""


class WidthExceeded(PosetconesError):
    """An operation requiring width <= 2 met a wider poset."""


class NotTransverse(PosetconesError):
    """The partition (or a permutation's cycle partition) is not P-transverse."""


class NotLinearExtension(PosetconesError):
    """The word is not a linear extension of the poset."""


class NotNaturallyLabeled(PosetconesError):
    """The identity word is not a linear extension, so descents are undefined."""


class NotDisjointChains(PosetconesError):
    """The poset is not a disjoint union of chains with consecutive labels."""


class ZeroPolynomial(PosetconesError):
    """Real-root counting is undefined for the zero polynomial."""


class DegreeExceeded(PosetconesError):
    """Requested exponent lies beyond the series truncation bound."""


class SupportMismatch(PosetconesError):
    """A word or column multiset disagrees with the declared multiplicities."""


class ParseError(PosetconesError):
    """Malformed text input; carries a human-readable location when known."""
