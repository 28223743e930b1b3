"""
Braid words, permutation braids and the prefix lattice on simple elements.

Conventions
-----------
A :class:`BraidWord` on ``n`` strands is a tuple of nonzero integers, ``+i`` for
sigma_i and ``-i`` for its inverse.

A :class:`PermutationBraid` stores the permutation ``perm`` (one-line notation on
``1..n``) obtained from any of its positive words by composing the adjacent
transpositions as functions, ``perm(sigma_i1 ... sigma_ik) = s_i1 o ... o s_ik``.
This makes ``word -> permutation`` a homomorphism: the permutation of ``ab`` is
``perm(a) o perm(b)``. Geometrically ``perm[p-1]`` is the top position of the
strand that ends at bottom position ``p``; :meth:`PermutationBraid.images` gives
the inverse map (where the strand starting at ``p`` ends up).

Left prefixes of simple braids are right weak order on permutations
(``a`` is a prefix of ``b`` iff inversion counts add along ``b = a . (a^-1 b)``),
so everything here is permutation arithmetic.
"""

from __future__ import annotations

import enum
import functools
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    InvalidLetter,
    InvalidStrandCount,
    NegativeLetter,
    NotSimple,
    ParseError,
    StrandMismatch,
)

Perm = tuple[int, ...]


class LatticeSide(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


# ---------------------------------------------------------------------------
# Braid words
# ---------------------------------------------------------------------------

_WORD_RE = re.compile(r"^\s*(\d+)\s*:(.*)$")


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 2:
            raise InvalidStrandCount(f"strand count must be at least 2, got {self.n}")
        object.__setattr__(self, "letters", tuple(int(a) for a in self.letters))
        for a in self.letters:
            if a == 0 or abs(a) >= self.n:
                raise InvalidLetter(f"letter {a} is not a generator of B_{self.n}")

    @classmethod
    def parse(cls, text: str) -> BraidWord:
        """
        Parse ``"n: i1 i2 ..."``; ``#`` starts a comment.

        >>> BraidWord.parse("3: 1 -2  # sigma_1 sigma_2^-1")
        BraidWord(n=3, letters=(1, -2))
        """
        body = text.split("#", 1)[0]
        m = _WORD_RE.match(body)
        if m is None:
            raise ParseError(f"expected 'n: letters', got {text!r}")
        try:
            letters = tuple(int(tok) for tok in m.group(2).split())
        except ValueError as exc:
            raise ParseError(f"non-integer letter in {text!r}") from exc
        return cls(int(m.group(1)), letters)

    def __str__(self) -> str:
        return f"{self.n}: " + " ".join(str(a) for a in self.letters) if self.letters else f"{self.n}:"

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        _check_same_n(self.n, other.n)
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.n, tuple(-a for a in reversed(self.letters)))

    def is_positive(self) -> bool:
        return all(a > 0 for a in self.letters)

    def tau(self) -> BraidWord:
        n = self.n
        return BraidWord(n, tuple((n - a) if a > 0 else -(n + a) for a in self.letters))


def _check_same_n(n1: int, n2: int) -> None:
    if n1 != n2:
        raise StrandMismatch(f"strand counts differ: {n1} vs {n2}")


# ---------------------------------------------------------------------------
# Raw permutation kernels (1-based one-line tuples). Cached: the braid groups
# we work in are small, and the same pairs recur constantly during normalisation.
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


@functools.lru_cache(maxsize=None)
def _w0(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def _compose(p: Perm, q: Perm) -> Perm:
    """(p o q)(k) = p(q(k))."""
    return tuple(p[k - 1] for k in q)


@functools.lru_cache(maxsize=1 << 16)
def _inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p, 1):
        out[v - 1] = i
    return tuple(out)


@functools.lru_cache(maxsize=1 << 16)
def _inversions(p: Perm) -> int:
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


@functools.lru_cache(maxsize=1 << 16)
def _right_descents(p: Perm) -> int:
    """Bitmask of i with p . s_i shorter, i.e. the word of p can end in sigma_i."""
    mask = 0
    for i in range(1, len(p)):
        if p[i - 1] > p[i]:
            mask |= 1 << i
    return mask


@functools.lru_cache(maxsize=1 << 16)
def _left_descents(p: Perm) -> int:
    """Bitmask of i with s_i . p shorter, i.e. sigma_i is a left prefix of p."""
    return _right_descents(_inverse(p))


def _swap_values(p: Perm, i: int) -> Perm:
    """s_i o p: exchange the values i and i+1."""
    return tuple(i + 1 if v == i else i if v == i + 1 else v for v in p)


def _swap_positions(p: Perm, i: int) -> Perm:
    """p o s_i: exchange the entries at positions i and i+1."""
    lst = list(p)
    lst[i - 1], lst[i] = lst[i], lst[i - 1]
    return tuple(lst)


@functools.lru_cache(maxsize=1 << 16)
def _tau(p: Perm) -> Perm:
    n = len(p)
    return tuple(n + 1 - p[n - k] for k in range(1, n + 1))


@functools.lru_cache(maxsize=1 << 16)
def _right_complement(p: Perm) -> Perm:
    """p* = p^-1 Delta."""
    return _compose(_inverse(p), _w0(len(p)))


@functools.lru_cache(maxsize=1 << 16)
def _left_complement(p: Perm) -> Perm:
    """*p = Delta p^-1."""
    return _compose(_w0(len(p)), _inverse(p))


def _lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


@functools.lru_cache(maxsize=1 << 18)
def _meet_left(a: Perm, b: Perm) -> tuple[Perm, Perm, Perm]:
    """
    Greedy left gcd. Returns (m, m^-1 a, m^-1 b).

    Any common prefix strictly below the meet extends by some generator that is a
    common prefix of both remainders, so the loop stops exactly at the meet.
    """
    m = _identity(len(a))
    while True:
        common = _left_descents(a) & _left_descents(b)
        if not common:
            return m, a, b
        i = _lowest_bit(common)
        m = _swap_positions(m, i)
        a = _swap_values(a, i)
        b = _swap_values(b, i)


def _is_prefix_left(a: Perm, b: Perm) -> bool:
    return _inversions(a) + _inversions(_compose(_inverse(a), b)) == _inversions(b)


def _is_prefix_right(a: Perm, b: Perm) -> bool:
    return _inversions(_compose(b, _inverse(a))) + _inversions(a) == _inversions(b)


@functools.lru_cache(maxsize=1 << 16)
def _canonical_word(p: Perm) -> tuple[int, ...]:
    out = []
    while True:
        d = _left_descents(p)
        if not d:
            return tuple(out)
        i = _lowest_bit(d)
        out.append(i)
        p = _swap_values(p, i)


# ---------------------------------------------------------------------------
# Permutation braids
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class PermutationBraid:
    n: int
    perm: Perm

    def __post_init__(self):
        if self.n < 2:
            raise InvalidStrandCount(f"strand count must be at least 2, got {self.n}")
        perm = tuple(int(v) for v in self.perm)
        if len(perm) != self.n or sorted(perm) != list(range(1, self.n + 1)):
            raise ValueError(f"{perm!r} is not a permutation of 1..{self.n}")
        object.__setattr__(self, "perm", perm)

    @classmethod
    def _of(cls, perm: Perm) -> PermutationBraid:
        """Wrap a tuple already known to be a permutation."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", len(perm))
        object.__setattr__(obj, "perm", perm)
        return obj

    @classmethod
    def identity(cls, n: int) -> PermutationBraid:
        return _wrap(_identity(n))

    @classmethod
    def generator(cls, n: int, i: int) -> PermutationBraid:
        if not 1 <= i < n:
            raise InvalidLetter(f"sigma_{i} is not a generator of B_{n}")
        return _wrap(_swap_positions(_identity(n), i))

    @property
    def length(self) -> int:
        """Number of crossings, i.e. the inversion count of the permutation."""
        return _inversions(self.perm)

    def is_identity(self) -> bool:
        return self.perm == _identity(self.n)

    def is_delta(self) -> bool:
        return self.perm == _w0(self.n)

    def images(self) -> Perm:
        """images()[p-1] is the bottom position of the strand starting at top position p."""
        return _inverse(self.perm)

    def word(self) -> BraidWord:
        return BraidWord(self.n, _canonical_word(self.perm))

    def left_descents(self) -> frozenset[int]:
        d = _left_descents(self.perm)
        return frozenset(i for i in range(1, self.n) if d >> i & 1)

    def right_descents(self) -> frozenset[int]:
        d = _right_descents(self.perm)
        return frozenset(i for i in range(1, self.n) if d >> i & 1)

    def reverse(self) -> PermutationBraid:
        """The simple braid read backwards (permutation inverse)."""
        return _wrap(_inverse(self.perm))

    def __repr__(self) -> str:
        return f"PermutationBraid({self.n}, {list(self.perm)})"


@functools.lru_cache(maxsize=1 << 16)
def _wrap(perm: Perm) -> PermutationBraid:
    return PermutationBraid._of(perm)


def delta(n: int) -> PermutationBraid:
    """The positive half twist of B_n."""
    if n < 2:
        raise InvalidStrandCount(f"Delta needs n >= 2, got {n}")
    return _wrap(_w0(n))


def tau(x):
    """The involution sigma_i -> sigma_{n-i} on words and permutation braids."""
    if isinstance(x, PermutationBraid):
        return _wrap(_tau(x.perm))
    if isinstance(x, BraidWord):
        return x.tau()
    raise TypeError(f"tau is not defined on {type(x).__name__}")


def word_to_permutation_braid(w: BraidWord) -> PermutationBraid:
    p = _identity(w.n)
    for a in w.letters:
        if a < 0:
            raise NegativeLetter(f"{w} contains the inverse letter {a}")
        if p[a - 1] > p[a]:
            raise NotSimple(f"{w} crosses a pair of strands twice")
        p = _swap_positions(p, a)
    return _wrap(p)


def permutation_braid_to_word(p: PermutationBraid) -> BraidWord:
    return p.word()


def complement(p: PermutationBraid, side: LatticeSide = LatticeSide.RIGHT) -> PermutationBraid:
    """Right: p* with p p* = Delta.  Left: *p with (*p) p = Delta."""
    if side is LatticeSide.RIGHT:
        return _wrap(_right_complement(p.perm))
    return _wrap(_left_complement(p.perm))


def meet(a: PermutationBraid, b: PermutationBraid, side: LatticeSide = LatticeSide.LEFT) -> PermutationBraid:
    _check_same_n(a.n, b.n)
    if side is LatticeSide.LEFT:
        return _wrap(_meet_left(a.perm, b.perm)[0])
    # right prefixes of x are the reversals of left prefixes of rev(x)
    return _wrap(_inverse(_meet_left(_inverse(a.perm), _inverse(b.perm))[0]))


def join(a: PermutationBraid, b: PermutationBraid, side: LatticeSide = LatticeSide.LEFT) -> PermutationBraid:
    _check_same_n(a.n, b.n)
    w0 = _w0(a.n)
    if side is LatticeSide.LEFT:
        # x -> w0 x reverses the right weak order
        m = _meet_left(_compose(w0, a.perm), _compose(w0, b.perm))[0]
        return _wrap(_compose(w0, m))
    ai, bi = _inverse(a.perm), _inverse(b.perm)
    m = _meet_left(_compose(w0, ai), _compose(w0, bi))[0]
    return _wrap(_inverse(_compose(w0, m)))


def is_prefix(a: PermutationBraid, b: PermutationBraid, side: LatticeSide = LatticeSide.LEFT) -> bool:
    _check_same_n(a.n, b.n)
    if side is LatticeSide.LEFT:
        return _is_prefix_left(a.perm, b.perm)
    return _is_prefix_right(a.perm, b.perm)


def all_permutation_braids(n: int) -> list[PermutationBraid]:
    """All n! simple braids, sorted by length then permutation."""
    from itertools import permutations

    out = [_wrap(p) for p in permutations(range(1, n + 1))]
    out.sort(key=lambda p: (p.length, p.perm))
    return out


def generators(n: int) -> list[PermutationBraid]:
    return [PermutationBraid.generator(n, i) for i in range(1, n)]


def parse_words(lines: Iterable[str]) -> list[BraidWord]:
    """Parse a corpus: one braid per line, blank and comment-only lines skipped."""
    out = []
    for line in lines:
        if line.split("#", 1)[0].strip():
            out.append(BraidWord.parse(line))
    return out


def letters_of(factors: Sequence[PermutationBraid]) -> tuple[int, ...]:
    out: list[int] = []
    for f in factors:
        out.extend(_canonical_word(f.perm))
    return tuple(out)
