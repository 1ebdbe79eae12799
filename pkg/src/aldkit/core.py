"""Paired binary words and the asymmetric Lee distance.

A quaternary symbol is stored as a pair (a_i; b_i) of bits.  Per position
the four symbols sit on a weighted confusion graph parameterised by a
positive integer lam:

* swapping (1;0) <-> (0;1) costs lam            (class 1),
* flipping one strand bit costs 1 + lam         (class 2),
* swapping (0;0) <-> (1;1) costs 2 * (1 + lam)  (class 3).

The distance between two words is the sum of the per-position edge
weights.  Words are stored as two bit masks so that lengths up to the
machine-int comfort zone (and beyond, Python ints are unbounded) need no
per-symbol heap objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

__all__ = [
    "BudgetExceeded",
    "ErrorClass",
    "PairedWord",
    "Automorphism",
    "ald_distance",
    "classify_position",
    "pair_weight",
    "map_symbols",
    "lee_distance",
    "apply_automorphism",
    "all_words",
    "canonical_weight_word",
]


class BudgetExceeded(RuntimeError):
    """An enumeration or solve was refused or cut short by its budget."""


_DIGIT_TO_SYMBOL = {"0": (0, 0), "1": (0, 1), "2": (1, 0), "3": (1, 1)}
_SYMBOL_TO_DIGIT = {v: k for k, v in _DIGIT_TO_SYMBOL.items()}

_DNA_TO_SYMBOL = {"G": (0, 0), "C": (0, 1), "T": (1, 0), "A": (1, 1)}
_SYMBOL_TO_DNA = {v: k for k, v in _DNA_TO_SYMBOL.items()}

# Symbol-to-integer maps.  gray4 walks the confusion graph so that
# adjacent integers are cheap transitions; nat4 is the plain binary
# reading used for wire formats; z10 spreads the symbols over Z_10 so
# that class-1 pairs land distance +-2 apart, class-2 pairs +-1 or +-4,
# and the class-3 pair exactly 5 apart.
_MAPS = {
    "gray4": {(0, 0): 1, (1, 0): 0, (0, 1): 2, (1, 1): 3},
    "nat4": {(0, 0): 0, (0, 1): 1, (1, 0): 2, (1, 1): 3},
    "z10": {(0, 0): 0, (0, 1): 1, (1, 0): 9, (1, 1): 5},
}


def _check_lambda(lam) -> int:
    if not isinstance(lam, int) or isinstance(lam, bool) or lam < 1:
        raise ValueError(f"lam must be a positive integer, got {lam!r}")
    return lam


class ErrorClass(Enum):
    """Edge classes of the per-position confusion graph."""

    NO_ERROR = "no_error"
    CLASS1 = "class1"
    CLASS2 = "class2"
    CLASS3 = "class3"

    def edge_weight(self, lam: int) -> int:
        """Distance contribution of one position in this class."""
        _check_lambda(lam)
        if self is ErrorClass.NO_ERROR:
            return 0
        if self is ErrorClass.CLASS1:
            return lam
        if self is ErrorClass.CLASS2:
            return 1 + lam
        return 2 * (1 + lam)


@dataclass(frozen=True, order=True)
class PairedWord:
    """A length-n word of paired bits, stored as two bit masks.

    Bit i of ``a`` and ``b`` holds the symbol at position i, so position
    0 corresponds to the least significant bit.  String constructors and
    renderers treat the leftmost character as position 0.
    """

    n: int
    a: int
    b: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("word length must be at least 1")
        top = 1 << self.n
        if not (0 <= self.a < top and 0 <= self.b < top):
            raise ValueError("bit masks out of range for word length")

    @classmethod
    def from_bits(cls, a_bits, b_bits) -> "PairedWord":
        a_bits = list(a_bits)
        b_bits = list(b_bits)
        if len(a_bits) != len(b_bits):
            raise ValueError("strand lengths differ")
        a = 0
        b = 0
        for i, (x, y) in enumerate(zip(a_bits, b_bits)):
            if x not in (0, 1) or y not in (0, 1):
                raise ValueError("strand entries must be bits")
            a |= x << i
            b |= y << i
        return cls(len(a_bits), a, b)

    @classmethod
    def from_digits(cls, text: str) -> "PairedWord":
        """Parse a word from quaternary digits, '0'=(0;0) '1'=(0;1) '2'=(1;0) '3'=(1;1)."""
        a = 0
        b = 0
        for i, ch in enumerate(text):
            try:
                x, y = _DIGIT_TO_SYMBOL[ch]
            except KeyError:
                raise ValueError(f"invalid quaternary digit {ch!r} at position {i}") from None
            a |= x << i
            b |= y << i
        if not text:
            raise ValueError("empty word")
        return cls(len(text), a, b)

    @classmethod
    def from_dna(cls, text: str) -> "PairedWord":
        """Parse a word from DNA letters, G=(0;0) C=(0;1) T=(1;0) A=(1;1)."""
        a = 0
        b = 0
        for i, ch in enumerate(text.upper()):
            try:
                x, y = _DNA_TO_SYMBOL[ch]
            except KeyError:
                raise ValueError(f"invalid DNA letter {ch!r} at position {i}") from None
            a |= x << i
            b |= y << i
        if not text:
            raise ValueError("empty word")
        return cls(len(text), a, b)

    def symbol(self, i: int) -> tuple[int, int]:
        if not (0 <= i < self.n):
            raise IndexError("position out of range")
        return ((self.a >> i) & 1, (self.b >> i) & 1)

    def symbols(self) -> tuple[tuple[int, int], ...]:
        return tuple(self.symbol(i) for i in range(self.n))

    def to_digits(self) -> str:
        return "".join(_SYMBOL_TO_DIGIT[s] for s in self.symbols())

    def to_dna(self) -> str:
        return "".join(_SYMBOL_TO_DNA[s] for s in self.symbols())


def pair_weight(x: PairedWord) -> int:
    """Number of positions where the two strands disagree."""
    return (x.a ^ x.b).bit_count()


def canonical_weight_word(n: int, w: int) -> PairedWord:
    """The canonical weight-w word: a = 0^n, b with ones in the first w positions."""
    if not (0 <= w <= n):
        raise ValueError("weight out of range")
    return PairedWord(n, 0, (1 << w) - 1)


def classify_position(s: tuple[int, int], t: tuple[int, int]) -> ErrorClass:
    """Classify the confusion-graph edge between two symbols."""
    if s == t:
        return ErrorClass.NO_ERROR
    da = s[0] ^ t[0]
    db = s[1] ^ t[1]
    if da and db:
        # Both bits changed: either the two mixed symbols swapped, or
        # the two pure symbols swapped.
        return ErrorClass.CLASS1 if s[0] != s[1] else ErrorClass.CLASS3
    return ErrorClass.CLASS2


def ald_distance(x: PairedWord, y: PairedWord, lam: int) -> int:
    """Asymmetric Lee distance between two words of equal length.

    Computed bit-parallel: per position the edge class follows from
    which strand bits flipped and whether the strands of x disagree
    there.
    """
    _check_lambda(lam)
    if x.n != y.n:
        raise ValueError("word lengths differ")
    da = x.a ^ y.a
    db = x.b ^ y.b
    both = da & db
    mixed = x.a ^ x.b  # positions where x holds (1;0) or (0;1)
    c1 = (both & mixed).bit_count()
    c2 = (da ^ db).bit_count()
    c3 = (both & ~mixed & ((1 << x.n) - 1)).bit_count()
    return lam * c1 + (1 + lam) * c2 + 2 * (1 + lam) * c3


def map_symbols(x: PairedWord, target: str) -> tuple[int, ...]:
    """Render a word as integers under one of the symbol maps.

    Targets: ``gray4`` (confusion-graph walk over Z_4), ``nat4`` (plain
    binary reading, the wire alphabet), ``z10`` (spread over Z_10).
    """
    try:
        table = _MAPS[target]
    except KeyError:
        raise ValueError(f"unknown symbol map {target!r}") from None
    return tuple(table[s] for s in x.symbols())


def lee_distance(u, v, q: int = 4) -> int:
    """Lee distance between integer sequences over Z_q."""
    u = tuple(u)
    v = tuple(v)
    if len(u) != len(v):
        raise ValueError("sequence lengths differ")
    total = 0
    for s, t in zip(u, v):
        if not (0 <= s < q and 0 <= t < q):
            raise ValueError("entries out of alphabet range")
        d = (s - t) % q
        total += min(d, q - d)
    return total


@dataclass(frozen=True)
class Automorphism:
    """A distance-preserving map: permute positions, then complement some.

    ``sigma[i]`` is the source position for output position i, and bit i
    of ``z`` says whether both strand bits at output position i are
    complemented.
    """

    n: int
    sigma: tuple[int, ...]
    z: int

    def __post_init__(self):
        if sorted(self.sigma) != list(range(self.n)):
            raise ValueError("sigma is not a permutation of range(n)")
        if not (0 <= self.z < (1 << self.n)):
            raise ValueError("complement mask out of range")


def apply_automorphism(x: PairedWord, pi: Automorphism) -> PairedWord:
    if pi.n != x.n:
        raise ValueError("word length does not match automorphism")
    a = 0
    b = 0
    for i, src in enumerate(pi.sigma):
        flip = (pi.z >> i) & 1
        a |= (((x.a >> src) & 1) ^ flip) << i
        b |= (((x.b >> src) & 1) ^ flip) << i
    return PairedWord(x.n, a, b)


def all_words(n: int):
    """Iterate every length-n word in a fixed deterministic order."""
    for a in range(1 << n):
        for b in range(1 << n):
            yield PairedWord(n, a, b)
