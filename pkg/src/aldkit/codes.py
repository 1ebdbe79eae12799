"""Code constructions over the paired-strand alphabet, with decoders.

Six families, all at desk scale with exhaustively verifiable distance:

- a strand-sum coset code correcting one symbol swap or detecting one
  single-bit flip (distance 3 at unit weighting),
- a doubled parity-check code lifting any binary matrix of null-space
  Hamming distance d >= 4 to the same guarantee on paired words,
- a single-parity code meeting the exact optimum for distance 2,
- a weight-partitioned union code combining small Hamming-type
  components on the disagreement subsequence with the coset code,
- a power-sum congruence code over an odd-prime field (odd design
  distance, positions weighted by powers of a primitive element),
- a two-component product-style code whose strand sums follow a ternary
  Manhattan-distance code and whose disagreement subsequence follows a
  binary Hamming-distance code (any integer weighting).

Codebooks are explicit word lists while 4**n stays enumerable and
membership predicates above that.  Binary component codewords are int
bitmasks (bit j = symbol at kept position j); ternary words are tuples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

from .core import (
    BudgetExceeded,
    PairedWord,
    all_words,
    map_symbols,
    pair_weight,
)

ENUM_LIMIT_N = 8  # explicit enumeration cap: 4**8 words

# Primitive polynomials over F2, degree v, as bitmask ints (LSB = x^0).
_PRIMITIVE_POLY = {
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10001001,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000001010011,
    13: 0b10000000011011,
    14: 0b100010001000011,
    15: 0b1000000000000011,
    16: 0b10001000000001011,
}


class DecodingError(RuntimeError):
    """Received word is outside the decoder's guaranteed error set."""


@dataclass(frozen=True)
class DetectionFlag:
    """Detector outcome: a nonzero syndrome, with the strand and
    position named when the syndrome determines them (single-flip
    patterns), None otherwise."""

    syndrome: int
    strand: str | None = None
    position: int | None = None


# ----------------------------------------------------------- F2 linear algebra


def _f2_rank(vectors) -> int:
    basis = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return len(basis)


def _kernel_basis(columns: tuple[int, ...], nrows: int) -> list[int]:
    """Basis of {x in F2^N : xor of x_j * column_j = 0}, columns as ints."""
    ncols = len(columns)
    rows = []
    for r in range(nrows):
        acc = 0
        for j, c in enumerate(columns):
            if (c >> r) & 1:
                acc |= 1 << j
        rows.append(acc)
    reduced: list[int] = []
    pivots: list[int] = []
    for row in rows:
        for prow, pcol in zip(reduced, pivots):
            if (row >> pcol) & 1:
                row ^= prow
        if row == 0:
            continue
        pcol = (row & -row).bit_length() - 1
        for i, prow in enumerate(reduced):
            if (prow >> pcol) & 1:
                reduced[i] = prow ^ row
        reduced.append(row)
        pivots.append(pcol)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = 1 << free
        for prow, pcol in zip(reduced, pivots):
            if (prow >> free) & 1:
                vec |= 1 << pcol
        basis.append(vec)
    return basis


@dataclass(frozen=True)
class BinaryParityCheck:
    """A binary parity-check matrix with columns stored as ints.

    Bit r of a column is the entry in row r.  claimed_distance is the
    asserted Hamming distance of the null-space code; distance_at_least
    verifies it exactly at desk scale.
    """

    rows: int
    columns: tuple[int, ...]
    claimed_distance: int

    def __post_init__(self):
        if self.rows < 1:
            raise ValueError("need at least one row")
        if self.claimed_distance < 1:
            raise ValueError("claimed distance must be positive")
        top = 1 << self.rows
        object.__setattr__(self, "columns", tuple(self.columns))
        if any(not (0 <= c < top) for c in self.columns):
            raise ValueError("column entries out of range for row count")

    @property
    def ncols(self) -> int:
        return len(self.columns)

    def distance_at_least(self, k: int) -> bool:
        """Exact check that the null-space Hamming distance is >= k.

        Distance >= k means no k-1 columns are linearly dependent; the
        ladder below is exact through k = 5, larger k falls back to
        null-space enumeration.
        """
        if k <= 1:
            return True
        if 0 in self.columns:
            return False
        if k == 2:
            return True
        if len(set(self.columns)) < self.ncols:
            return False
        if k == 3:
            return True
        colset = set(self.columns)
        for c1, c2 in combinations(self.columns, 2):
            if c1 ^ c2 in colset:
                return False
        if k == 4:
            return True
        for c1, c2, c3 in combinations(self.columns, 3):
            if c1 ^ c2 ^ c3 in colset:
                return False
        if k == 5:
            return True
        dist = self.min_distance()
        return dist is None or dist >= k

    def min_distance(self) -> int | None:
        """Exact null-space minimum weight; None for the trivial code."""
        basis = _kernel_basis(self.columns, self.rows)
        if not basis:
            return None
        if len(basis) > 20:
            raise BudgetExceeded(
                f"null space has 2^{len(basis)} words, too many to scan"
            )
        best = None
        for mask in range(1, 1 << len(basis)):
            word = 0
            m = mask
            while m:
                word ^= basis[(m & -m).bit_length() - 1]
                m &= m - 1
            w = word.bit_count()
            if best is None or w < best:
                best = w
        return best

    def validate(self):
        """Raise unless the claimed distance holds (exact at desk scale)."""
        if not self.distance_at_least(self.claimed_distance):
            raise ValueError(
                f"null-space distance is below the claimed "
                f"{self.claimed_distance}"
            )


# ------------------------------------------------------------------- codebooks


@dataclass
class Codebook:
    """A set of paired words with a designed minimum distance.

    words is the explicit list at desk scale and None above it;
    membership testing always works.  size is exact in either case
    whenever the construction pins it down.
    """

    n: int
    lam: int
    design_distance: int
    construction: str
    params: dict
    words: tuple | None = None
    size: int | None = None
    membership: object = field(default=None, repr=False)

    def __post_init__(self):
        if self.words is not None:
            self.words = tuple(self.words)
            keys = {(w.a, w.b) for w in self.words}
            if len(keys) != len(self.words):
                raise ValueError("duplicate words in codebook")
            if any(w.n != self.n for w in self.words):
                raise ValueError("word length mismatch")
            self.size = len(self.words)
            if self.membership is None:
                self.membership = lambda w: (w.a, w.b) in keys

    def __contains__(self, word) -> bool:
        if self.membership is None:
            raise TypeError("codebook has no membership predicate")
        return bool(self.membership(word))

    def __len__(self) -> int:
        if self.size is None:
            raise TypeError("codebook size not determined")
        return self.size

    def __iter__(self):
        if self.words is None:
            raise TypeError("codebook is implicit, no word list")
        return iter(self.words)


# -------------------------------------------- strand-sum coset code, distance 3


def build_H01(v: int) -> BinaryParityCheck:
    """The v x (2^v - 2) matrix whose columns are every nonzero
    vector except all-ones, ordered as increasing binary integers."""
    if v < 2:
        raise ValueError("need v >= 2")
    return BinaryParityCheck(
        rows=v, columns=tuple(range(1, (1 << v) - 1)), claimed_distance=3
    )


def _cl_syndrome(v: int, word: PairedWord) -> int:
    # Column for position p is the integer p+1; the second strand only
    # contributes its parity times the all-ones vector.
    s = 0
    a = word.a
    while a:
        low = a & -a
        s ^= low.bit_length()
        a &= a - 1
    if word.b.bit_count() & 1:
        s ^= (1 << v) - 1
    return s


def build_cl(v: int, u: int = 0) -> Codebook:
    """Coset code: first strand weighted by the nonzero non-ones columns
    plus second-strand parity times all-ones must equal u.

    Size is exactly 4**n / 2**v (the syndrome map is surjective).
    Minimum distance 3 at unit weighting, for every coset.
    """
    if v < 2:
        raise ValueError("need v >= 2")
    if not (0 <= u < (1 << v)):
        raise ValueError("coset label out of range")
    n = (1 << v) - 2
    size = 4**n // (1 << v)
    params = {"v": v, "u": u}
    if n <= ENUM_LIMIT_N:
        words = tuple(w for w in all_words(n) if _cl_syndrome(v, w) == u)
        return Codebook(n, 1, 3, "cl", params, words=words)
    return Codebook(
        n, 1, 3, "cl", params, size=size,
        membership=lambda w: _cl_syndrome(v, w) == u,
    )


def decode_cl(v: int, u: int, received: PairedWord, mode: str):
    """Syndrome decoder for the strand-sum coset code.

    correct_class1: assumes at most one symbol-swap error; returns the
    decoded word or raises DecodingError on an impossible syndrome.
    detect_class2: assumes at most one single-bit flip; returns the word
    when the syndrome is clean, else a DetectionFlag naming the strand
    (and position, for first-strand flips).
    """
    n = (1 << v) - 2
    if received.n != n:
        raise ValueError("received word length does not match v")
    if not (0 <= u < (1 << v)):
        raise ValueError("coset label out of range")
    ones = (1 << v) - 1
    s = _cl_syndrome(v, received) ^ u
    if mode == "detect_class2":
        if s == 0:
            return received
        if s == ones:
            return DetectionFlag(syndrome=s, strand="b")
        return DetectionFlag(syndrome=s, strand="a", position=s - 1)
    if mode == "correct_class1":
        st = s ^ ones
        if st == ones:
            return received
        if 1 <= st < ones:
            flip = 1 << (st - 1)
            return PairedWord(n, received.a ^ flip, received.b ^ flip)
        raise DecodingError("uncorrectable pattern")
    raise ValueError(f"unknown decode mode {mode!r}")


# --------------------------------------- doubled parity-check code, distance d


def build_cL(n: int, check: BinaryParityCheck) -> Codebook:
    """Lift a binary code with null-space distance d >= 4 on 2n bits to
    paired words: first strand takes the first n columns, second strand
    the XOR of matching first and second halves."""
    if check.ncols != 2 * n:
        raise ValueError("parity check must have exactly 2n columns")
    if check.claimed_distance < 4:
        raise ValueError("need null-space distance at least 4")
    check.validate()
    first = check.columns[:n]
    effective = tuple(first) + tuple(
        check.columns[i] ^ check.columns[n + i] for i in range(n)
    )

    def member(word: PairedWord) -> bool:
        s = 0
        a = word.a
        while a:
            low = a & -a
            s ^= effective[low.bit_length() - 1]
            a &= a - 1
        b = word.b
        while b:
            low = b & -b
            s ^= effective[n + low.bit_length() - 1]
            b &= b - 1
        return s == 0

    size = 1 << (2 * n - _f2_rank(effective))
    params = {"claimed_distance": check.claimed_distance}
    if n <= ENUM_LIMIT_N:
        words = tuple(w for w in all_words(n) if member(w))
        book = Codebook(
            n, 1, check.claimed_distance, "cL", params, words=words
        )
        if book.size != size:
            raise AssertionError("kernel size does not match enumeration")
        return book
    return Codebook(
        n, 1, check.claimed_distance, "cL", params,
        size=size, membership=member,
    )


class _GF2Power:
    """GF(2^v) as bitmask ints with a fixed primitive polynomial."""

    def __init__(self, v: int):
        try:
            self.poly = _PRIMITIVE_POLY[v]
        except KeyError:
            raise ValueError(f"unsupported field degree {v}") from None
        self.v = v
        self.order = (1 << v) - 1

    def mul(self, x: int, y: int) -> int:
        out = 0
        while y:
            if y & 1:
                out ^= x
            y >>= 1
            x <<= 1
            if x >> self.v:
                x ^= self.poly
        return out

    def alpha_powers(self) -> list[int]:
        # Powers of the class of x, which is primitive for these moduli.
        out = [1]
        for _ in range(self.order - 1):
            out.append(self.mul(out[-1], 0b10))
        return out


def bch_parity_check(v: int, d: int) -> BinaryParityCheck:
    """Parity check of a one-position-shortened cyclic code, length
    2^v - 2.  d=3 drops the all-ones column from the all-nonzero-columns
    check; d=5 stacks first and third powers of a primitive element,
    dropping the zeroth position."""
    if d == 3:
        if v < 2:
            raise ValueError("need v >= 2")
        return build_H01(v)
    if d == 5:
        gf = _GF2Power(v)
        powers = gf.alpha_powers()
        cols = []
        for i in range(1, (1 << v) - 1):
            cols.append((powers[i] << v) | powers[(3 * i) % gf.order])
        return BinaryParityCheck(
            rows=2 * v, columns=tuple(cols), claimed_distance=5
        )
    raise ValueError("only distances 3 and 5 are tabulated")


# ------------------------------------------------- single-parity code, distance 2


def build_cp(n: int) -> Codebook:
    """All words whose strands disagree somewhere and whose first strand
    has even parity, plus every word with identical strands.  Exactly
    2^(2n-1) + 2^(n-1) words, minimum distance 2 at unit weighting."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n > ENUM_LIMIT_N:
        raise BudgetExceeded(f"4^{n} words exceed the enumeration cap")
    words = tuple(
        w
        for w in all_words(n)
        if w.a == w.b or w.a.bit_count() % 2 == 0
    )
    return Codebook(n, 1, 2, "cp", {}, words=words)


# -------------------------------------- weight-partitioned union code, distance 3


def s_subsequence(word: PairedWord) -> int:
    """First-strand bits at the positions where the strands disagree,
    packed as a bitmask in increasing position order."""
    out = 0
    j = 0
    diff = word.a ^ word.b
    for p in range(word.n):
        if (diff >> p) & 1:
            out |= ((word.a >> p) & 1) << j
            j += 1
    return out


def _hamming_words(length: int) -> frozenset[int]:
    # Null space of the all-nonzero-columns check, as bitmask ints.
    if length == 1:
        return frozenset({0})
    rows = (length + 1).bit_length() - 1
    check = BinaryParityCheck(
        rows=rows, columns=tuple(range(1, length + 1)), claimed_distance=3
    )
    basis = _kernel_basis(check.columns, rows)
    words = {0}
    for b in basis:
        words |= {w ^ b for w in words}
    return frozenset(words)


def hamming_component(w: int) -> frozenset[int]:
    """A length-w binary code of Hamming distance >= 3 (vacuous below
    two words), w in {1,3,5,7}: the zero-containing member of the
    standard coset partition, shortened on the last positions for w=5."""
    if w == 1:
        return frozenset({0})
    if w == 3:
        return frozenset({0b000, 0b111})
    if w == 5:
        length7 = _hamming_words(7)
        return frozenset(c & 0b11111 for c in length7 if c >> 5 == 0)
    if w == 7:
        return _hamming_words(7)
    raise ValueError("components exist for weights 1, 3, 5, 7 only")


def build_partition_code(v: int, u: int = 0) -> Codebook:
    """Union code on n = 2^v - 2 positions: words of odd disagreement
    weight at most 7 whose disagreement subsequence lies in a distance-3
    component, plus words of weight at least 9 drawn from the strand-sum
    coset u.  Minimum distance 3 at unit weighting."""
    if v < 2:
        raise ValueError("need v >= 2")
    if not (0 <= u < (1 << v)):
        raise ValueError("coset label out of range")
    n = (1 << v) - 2
    components = {w: hamming_component(w) for w in (1, 3, 5, 7) if w <= n}

    def member(word: PairedWord) -> bool:
        w = pair_weight(word)
        if w in components:
            return s_subsequence(word) in components[w]
        if w >= 9:
            return _cl_syndrome(v, word) == u
        return False

    params = {"v": v, "u": u}
    if n <= ENUM_LIMIT_N:
        words = tuple(w for w in all_words(n) if member(w))
        return Codebook(n, 1, 3, "partition", params, words=words)
    return Codebook(n, 1, 3, "partition", params, membership=member)


# ------------------------------------ power-sum congruence code, odd distance d


def _is_odd_prime(q: int) -> bool:
    if q < 3 or q % 2 == 0:
        return False
    f = 3
    while f * f <= q:
        if q % f == 0:
            return False
        f += 2
    return True


# Monic irreducible polynomials for small extensions, coefficients
# little-endian including the leading 1.
_IRREDUCIBLE = {
    (3, 2): (1, 0, 1),
    (5, 2): (3, 0, 1),
    (7, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
}


class OddPrimeField:
    """F_{q^l} for an odd prime q, elements encoded as ints in
    [0, q^l) whose base-q digits are polynomial coefficients
    (little-endian).  alpha must generate the multiplicative group."""

    def __init__(self, q: int, l: int = 1, alpha: int | None = None,
                 modulus: tuple | None = None):
        if not _is_odd_prime(q):
            raise ValueError("q must be an odd prime")
        if l < 1:
            raise ValueError("extension degree must be positive")
        self.q = q
        self.l = l
        self.size = q**l
        if l == 1:
            self.modulus = None
        else:
            if modulus is None:
                modulus = _IRREDUCIBLE.get((q, l))
                if modulus is None:
                    raise ValueError(
                        f"no stored modulus for ({q}, {l}); pass one"
                    )
            modulus = tuple(c % q for c in modulus)
            if len(modulus) != l + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree l")
            self.modulus = modulus
            if self._has_root(modulus) and l >= 2:
                raise ValueError("modulus has a root, not irreducible")
        if alpha is None:
            alpha = self._find_generator()
        if not (1 <= alpha < self.size):
            raise ValueError("alpha out of field range")
        if self._order(alpha) != self.size - 1:
            raise ValueError("alpha does not generate the multiplicative group")
        self.alpha = alpha
        self._alpha_powers = [1]
        for _ in range(self.size - 2):
            self._alpha_powers.append(self.mul(self._alpha_powers[-1], alpha))

    def _digits(self, x: int) -> list[int]:
        out = []
        for _ in range(self.l):
            out.append(x % self.q)
            x //= self.q
        return out

    def _pack(self, digits) -> int:
        out = 0
        for c in reversed(list(digits)):
            out = out * self.q + (c % self.q)
        return out

    def _has_root(self, modulus) -> bool:
        for r in range(self.q):
            acc = 0
            for c in reversed(modulus):
                acc = (acc * r + c) % self.q
            if acc == 0:
                return True
        return False

    def add(self, x: int, y: int) -> int:
        if self.l == 1:
            return (x + y) % self.q
        dx, dy = self._digits(x), self._digits(y)
        return self._pack((a + b) % self.q for a, b in zip(dx, dy))

    def neg(self, x: int) -> int:
        if self.l == 1:
            return (-x) % self.q
        return self._pack((-c) % self.q for c in self._digits(x))

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if self.l == 1:
            return (x * y) % self.q
        dx, dy = self._digits(x), self._digits(y)
        raw = [0] * (2 * self.l - 1)
        for i, a in enumerate(dx):
            if a:
                for j, b in enumerate(dy):
                    raw[i + j] = (raw[i + j] + a * b) % self.q
        # Reduce x^k = -(modulus minus leading term) * x^(k-l).
        for k in range(2 * self.l - 2, self.l - 1, -1):
            c = raw[k]
            if c:
                raw[k] = 0
                for j in range(self.l):
                    raw[k - self.l + j] = (
                        raw[k - self.l + j] - c * self.modulus[j]
                    ) % self.q
        return self._pack(raw[: self.l])

    def _order(self, x: int) -> int:
        acc = x
        for k in range(1, self.size):
            if acc == 1:
                return k
            acc = self.mul(acc, x)
        raise ArithmeticError("element order not found")

    def _find_generator(self) -> int:
        for cand in range(2, self.size):
            if self._order(cand) == self.size - 1:
                return cand
        raise ArithmeticError("no generator found")

    def from_int(self, k: int) -> int:
        return k % self.q

    def alpha_pow(self, k: int) -> int:
        return self._alpha_powers[k % (self.size - 1)]


def _digit_values(word: PairedWord) -> tuple[int, ...]:
    return map_symbols(word, "nat4")


def _cn_signature(field: OddPrimeField, d: int, word: PairedWord):
    phis = _digit_values(word)
    half = d // 2
    sums = []
    for k in range(1, half + 1):
        acc = 0
        for i, phi in enumerate(phis, start=1):
            if phi:
                acc = field.add(
                    acc, field.mul(field.from_int(phi), field.alpha_pow(i * k))
                )
        sums.append(acc)
    return sum(phis) % d, tuple(sums)


def _check_cn_params(field: OddPrimeField, d: int):
    if d < 1 or d % 2 == 0:
        raise ValueError("design distance must be odd")
    if field.q < d + 1:
        raise ValueError("need q >= d + 1")


def build_cn(field: OddPrimeField, d: int, u: int, z: tuple) -> Codebook:
    """Power-sum congruence code on n = q^l - 1 positions: the word's
    digit values must sum to u modulo d and match the prescribed first
    floor(d/2) power sums over the field.  Minimum distance >= d at
    unit weighting; the cosets over all (u, z) partition the space."""
    _check_cn_params(field, d)
    if not (0 <= u < d):
        raise ValueError("congruence class out of range")
    z = tuple(z)
    if len(z) != d // 2:
        raise ValueError("need exactly floor(d/2) power-sum targets")
    if any(not (0 <= zk < field.size) for zk in z):
        raise ValueError("power-sum target out of field range")
    n = field.size - 1
    if n > ENUM_LIMIT_N:
        raise BudgetExceeded(f"4^{n} words exceed the enumeration cap")
    words = tuple(
        w for w in all_words(n) if _cn_signature(field, d, w) == (u, z)
    )
    params = {"q": field.q, "l": field.l, "alpha": field.alpha,
              "u": u, "z": z}
    return Codebook(n, 1, d, "cn", params, words=words)


def best_cn_coset(field: OddPrimeField, d: int):
    """Scan every (u, z) coset and return the largest as (u, z, book).

    The averaging bound guarantees size >= 4^n / (d (n+1)^floor(d/2))
    for the winner.  Ties break toward the smallest (u, z)."""
    _check_cn_params(field, d)
    n = field.size - 1
    if n > ENUM_LIMIT_N:
        raise BudgetExceeded(f"4^{n} words exceed the enumeration cap")
    buckets: dict = {}
    for w in all_words(n):
        buckets.setdefault(_cn_signature(field, d, w), []).append(w)
    u, z = min(buckets, key=lambda sig: (-len(buckets[sig]), sig))
    params = {"q": field.q, "l": field.l, "alpha": field.alpha,
              "u": u, "z": z}
    book = Codebook(n, 1, d, "cn", params, words=tuple(buckets[(u, z)]))
    return u, z, book


def decode_cn(field: OddPrimeField, d: int, u: int, z: tuple,
              received: PairedWord) -> PairedWord:
    """Syndrome-lookup decoder: corrects any digit-error pattern of Lee
    weight at most floor(d/2) over F_q by matching the syndrome against
    a precomputed table.  Desk scale only; algebraic decoding of the
    power sums is out of scope."""
    _check_cn_params(field, d)
    z = tuple(z)
    n = field.size - 1
    if received.n != n:
        raise ValueError("received word length does not match the field")
    half = d // 2
    # Integer lifts with Lee weight (sum of absolute values) <= half.
    table: dict = {}
    magnitudes = range(-half, half + 1)

    def patterns(prefix, budget, pos):
        if pos == n:
            yield tuple(prefix)
            return
        for m in magnitudes:
            if abs(m) <= budget:
                yield from patterns(prefix + [m], budget - abs(m), pos + 1)

    for lift in patterns([], half, 0):
        s0 = sum(lift) % d
        sums = []
        for k in range(1, half + 1):
            acc = 0
            for i, m in enumerate(lift, start=1):
                if m:
                    term = field.mul(
                        field.from_int(m % field.q), field.alpha_pow(i * k)
                    )
                    acc = field.add(acc, term)
            sums.append(acc)
        key = (s0, tuple(sums))
        if key in table and table[key] != lift:
            raise ArithmeticError("syndrome collision inside the error set")
        table[key] = lift
    got_u, got_z = _cn_signature(field, d, received)
    delta = (
        (got_u - u) % d,
        tuple(field.sub(a, b) for a, b in zip(got_z, z)),
    )
    lift = table.get(delta)
    if lift is None:
        raise DecodingError("uncorrectable pattern")
    phis = _digit_values(received)
    fixed = [p - m for p, m in zip(phis, lift)]
    if any(not (0 <= p <= 3) for p in fixed):
        raise DecodingError("uncorrectable pattern")
    a = 0
    b = 0
    for i, p in enumerate(fixed):
        a |= (p >> 1) << i
        b |= (p & 1) << i
    out = PairedWord(n, a, b)
    if _cn_signature(field, d, out) != (u, z):
        raise DecodingError("uncorrectable pattern")
    return out


# ------------------------------------ two-component code, arbitrary weighting


def distance_decomposition(x: PairedWord, y: PairedWord) -> tuple[int, int, int]:
    """Split the differing positions of two words into the three edge
    classes: I swaps (both words mixed, first strands differ), J double
    flips (both words pure, first strands differ), K single flips (the
    rest).  The distance at weighting lam is lam*I + (1+lam)*K +
    2*(1+lam)*J."""
    if x.n != y.n:
        raise ValueError("word lengths differ")
    full = (1 << x.n) - 1
    mixed_x = x.a ^ x.b
    mixed_y = y.a ^ y.b
    first_diff = x.a ^ y.a
    i_count = (mixed_x & mixed_y & first_diff).bit_count()
    j_count = (~mixed_x & ~mixed_y & first_diff & full).bit_count()
    total = ((x.a ^ y.a) | (x.b ^ y.b)).bit_count()
    return i_count, j_count, total - i_count - j_count


def min_l1_distance(code) -> int | None:
    """Minimum pairwise Manhattan distance; None below two words."""
    words = [tuple(w) for w in code]
    best = None
    for x, y in combinations(words, 2):
        dist = sum(abs(a - b) for a, b in zip(x, y))
        if best is None or dist < best:
            best = dist
    return best


def min_hamming_distance(code) -> int | None:
    """Minimum pairwise Hamming distance over int bitmasks; None below
    two words."""
    masks = list(code)
    best = None
    for x, y in combinations(masks, 2):
        dist = (x ^ y).bit_count()
        if best is None or dist < best:
            best = dist
    return best


def build_clambda(n: int, d: int, lam: int, cm, ch_family) -> Codebook:
    """Two-component code for any weighting: the per-position strand
    sums (real addition, values 0/1/2) must form a word of the ternary
    Manhattan code cm with distance >= ceil(d/(1+lam)), and the
    disagreement subsequence must lie in ch_family[weight], a binary
    code of Hamming distance >= ceil(d/lam).  Weights missing from
    ch_family contribute no words."""
    if n < 1 or d < 1 or lam < 1:
        raise ValueError("need n >= 1, d >= 1, lam >= 1")
    if n > ENUM_LIMIT_N:
        raise BudgetExceeded(f"4^{n} words exceed the enumeration cap")
    need_m = -(-d // (1 + lam))
    need_h = -(-d // lam)
    cm_set = set()
    for w in cm:
        w = tuple(w)
        if len(w) != n or any(c not in (0, 1, 2) for c in w):
            raise ValueError("ternary component word malformed")
        cm_set.add(w)
    got = min_l1_distance(cm_set)
    if got is not None and got < need_m:
        raise ValueError(
            f"component distance shortfall: ternary code has Manhattan "
            f"distance {got}, need {need_m}"
        )
    family = {}
    for w, code in ch_family.items():
        masks = frozenset(code)
        if any(not (0 <= m < (1 << w)) for m in masks):
            raise ValueError(f"weight-{w} component mask out of range")
        got = min_hamming_distance(masks)
        if got is not None and got < need_h:
            raise ValueError(
                f"component distance shortfall: weight-{w} code has "
                f"Hamming distance {got}, need {need_h}"
            )
        family[w] = masks

    def member(word: PairedWord) -> bool:
        sums = tuple(
            ((word.a >> p) & 1) + ((word.b >> p) & 1) for p in range(n)
        )
        if sums not in cm_set:
            return False
        code = family.get(pair_weight(word))
        if code is None:
            return False
        return s_subsequence(word) in code

    words = tuple(w for w in all_words(n) if member(w))
    params = {"manhattan_distance": need_m, "hamming_distance": need_h}
    return Codebook(n, lam, d, "clambda", params, words=words)


def greedy_manhattan_code(n: int, d: int):
    """Lexicographic greedy scan of {0,1,2}^n keeping words at Manhattan
    distance >= d from everything kept, post-verified."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1, d >= 1")
    if 3**n > 3**10:
        raise BudgetExceeded(f"3^{n} words exceed the enumeration cap")
    if d == 1:
        return tuple(product((0, 1, 2), repeat=n))
    kept: list[tuple] = []
    for cand in product((0, 1, 2), repeat=n):
        ok = True
        for w in kept:
            if sum(abs(a - b) for a, b in zip(cand, w)) < d:
                ok = False
                break
        if ok:
            kept.append(cand)
    verified = min_l1_distance(kept)
    if verified is not None and verified < d:
        raise AssertionError("greedy scan produced a distance shortfall")
    return tuple(kept)
