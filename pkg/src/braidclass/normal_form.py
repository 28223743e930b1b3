"""
Left-weighted normal forms Delta^u x_1 ... x_k and group arithmetic on them.

The workhorse is :func:`local_slide`, which moves as much of ``b`` as possible
into ``a``. Right multiplication by a simple element is one right-to-left pass of
slides; left multiplication is one left-to-right pass carrying the remainder.
Both passes stop as soon as a slide changes nothing, since the pairs further
along were already weighted.
"""

from __future__ import annotations

import functools
import os
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .braid_core import (
    BraidWord,
    PermutationBraid,
    _compose,
    _identity,
    _inverse,
    _left_descents,
    _meet_left,
    _right_complement,
    _right_descents,
    _swap_positions,
    _tau,
    _w0,
    _wrap,
    _canonical_word,
    _check_same_n,
)
from .errors import EmptyFactorSequence, InvariantViolation

# Structural checks on every WeightedForm construction. Off by default; the test
# suite switches them on for the whole session.
CHECK_INVARIANTS = os.environ.get("BRAIDCLASS_CHECK_INVARIANTS", "") not in ("", "0")
INVARIANT_STATS = {"checked": 0, "violations": 0}


def enable_invariant_checks(flag: bool = True) -> None:
    global CHECK_INVARIANTS
    CHECK_INVARIANTS = flag


# ---------------------------------------------------------------------------
# pairwise primitives
# ---------------------------------------------------------------------------

def _weighted(a, b) -> bool:
    # a* ^ b = e  iff  every generator that starts b already ends a
    return not (_left_descents(b) & ~_right_descents(a))


@functools.lru_cache(maxsize=1 << 18)
def _slide(a, b):
    s, _, rest = _meet_left(_right_complement(a), b)
    return _compose(a, s), rest


def is_left_weighted_pair(a: PermutationBraid, b: PermutationBraid) -> bool:
    _check_same_n(a.n, b.n)
    return _weighted(a.perm, b.perm)


def local_slide(a: PermutationBraid, b: PermutationBraid) -> tuple[PermutationBraid, PermutationBraid]:
    """Return (a s, s^-1 b) with s = a* ^ b; the product is unchanged."""
    _check_same_n(a.n, b.n)
    a2, b2 = _slide(a.perm, b.perm)
    return _wrap(a2), _wrap(b2)


def _insert_right(fs: list, f) -> None:
    """In place: fs is a weighted list (possibly led by Deltas); append simple f and rebalance."""
    fs.append(f)
    j = len(fs) - 1
    while j > 0:
        a, b = fs[j - 1], fs[j]
        a2, b2 = _slide(a, b)
        if a2 == a:
            break
        fs[j - 1], fs[j] = a2, b2
        j -= 1
    if fs and fs[-1] == _identity(len(f)):
        fs.pop()


def _insert_left(f, fs: Sequence) -> list:
    """Return the weighted list for f . fs (fs weighted, no Delta factors)."""
    out = []
    carry = f
    e = _identity(len(f))
    for idx, x in enumerate(fs):
        if carry == e:
            out.extend(fs[idx:])
            return out
        y, carry = _slide(carry, x)
        out.append(y)
    if carry != e:
        out.append(carry)
    return out


def _strip(n: int, u: int, fs: list) -> tuple[int, tuple]:
    """Absorb leading Deltas into u, drop trailing identities."""
    w0, e = _w0(n), _identity(n)
    lo, hi = 0, len(fs)
    while lo < hi and fs[lo] == w0:
        lo += 1
    while hi > lo and fs[hi - 1] == e:
        hi -= 1
    return u + lo, tuple(fs[lo:hi])


def _tau_all(fs: Iterable, m: int) -> list:
    if m % 2 == 0:
        return list(fs)
    return [_tau(f) for f in fs]


# ---------------------------------------------------------------------------
# WeightedForm
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WeightedForm:
    """
    Delta^u x_1 ... x_k with every x_i simple, none equal to e or Delta, and
    each adjacent pair left-weighted. Equal group elements have equal forms.
    """

    n: int
    u: int = 0
    factors: tuple[PermutationBraid, ...] = ()
    _raw: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        object.__setattr__(self, "_raw", tuple(f.perm for f in self.factors))
        if CHECK_INVARIANTS:
            self._check()

    def _check(self) -> None:
        INVARIANT_STATS["checked"] += 1
        problem = structural_violation(self)
        if problem is not None:
            INVARIANT_STATS["violations"] += 1
            raise InvariantViolation(problem)

    @classmethod
    def _from_raw(cls, n: int, u: int, raw: Sequence) -> WeightedForm:
        return cls(n, u, tuple(_wrap(p) for p in raw))

    @classmethod
    def identity(cls, n: int) -> WeightedForm:
        return cls(n, 0, ())

    @classmethod
    def delta_power(cls, n: int, m: int) -> WeightedForm:
        return cls(n, m, ())

    @classmethod
    def simple(cls, p: PermutationBraid) -> WeightedForm:
        u, fs = _strip(p.n, 0, [p.perm])
        return cls._from_raw(p.n, u, fs)

    # --- invariants ------------------------------------------------------
    @property
    def inf(self) -> int:
        return self.u

    @property
    def sup(self) -> int:
        return self.u + len(self.factors)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def head(self) -> PermutationBraid:
        if not self.factors:
            raise EmptyFactorSequence("a pure Delta power has no head")
        return self.factors[0]

    @property
    def tail(self) -> PermutationBraid:
        if not self.factors:
            raise EmptyFactorSequence("a pure Delta power has no tail")
        return self.factors[-1]

    def is_delta_power(self) -> bool:
        return not self.factors

    def is_identity(self) -> bool:
        return self.u == 0 and not self.factors

    def key(self) -> tuple:
        """Hashable canonical key (cheaper than hashing the dataclass)."""
        return (self.u, self._raw)

    # --- conversions -----------------------------------------------------
    def word(self) -> BraidWord:
        d = _canonical_word(_w0(self.n))
        letters: list[int] = []
        if self.u >= 0:
            letters.extend(d * self.u)
        else:
            letters.extend(-a for a in reversed(d * -self.u))
        for p in self._raw:
            letters.extend(_canonical_word(p))
        return BraidWord(self.n, tuple(letters))

    def to_dict(self) -> dict:
        return {"n": self.n, "u": self.u, "factors": [list(p) for p in self._raw]}

    @classmethod
    def from_dict(cls, data: dict) -> WeightedForm:
        n = int(data["n"])
        return cls(n, int(data["u"]), tuple(PermutationBraid(n, tuple(f)) for f in data["factors"]))

    def __str__(self) -> str:
        parts = [f"D^{self.u}"] if self.u else []
        for p in self._raw:
            w = _canonical_word(p)
            parts.append("(" + " ".join(str(a) for a in w) + ")")
        return f"{self.n}: " + (" ".join(parts) if parts else "e")

    # --- arithmetic sugar ------------------------------------------------
    def __mul__(self, other: WeightedForm) -> WeightedForm:
        return mul(self, other)

    def __pow__(self, m: int) -> WeightedForm:
        return power(self, m)


def structural_violation(x: WeightedForm) -> str | None:
    """Describe the first broken WeightedForm invariant, or None."""
    e, w0 = _identity(x.n), _w0(x.n)
    raw = x._raw
    for i, p in enumerate(raw):
        if len(p) != x.n:
            return f"factor {i} has {len(p)} strands, form has {x.n}"
        if p == e:
            return f"factor {i} is the identity"
        if p == w0:
            return f"factor {i} is Delta"
    for i in range(len(raw) - 1):
        # by definition: a* ^ b = e
        if _meet_left(_right_complement(raw[i]), raw[i + 1])[0] != e:
            return f"factors {i},{i + 1} are not left-weighted"
    return None


# ---------------------------------------------------------------------------
# construction and arithmetic
# ---------------------------------------------------------------------------

def _letter_factors(w: BraidWord) -> tuple[int, list]:
    """
    Rewrite w as Delta^-N f_1 ... f_L with simple f_j.

    sigma_i^-1 = Delta^-1 (Delta sigma_i^-1); each Delta^-1 moved to the front
    applies tau to every factor it passes.
    """
    n = w.n
    w0 = _w0(n)
    after = sum(1 for a in w.letters if a < 0)
    out = []
    for a in w.letters:
        if a > 0:
            f = _swap_positions(_identity(n), a)
        else:
            after -= 1
            f = _swap_positions(w0, a * -1)  # Delta o s_i
        out.append(_tau(f) if after % 2 else f)
    return -sum(1 for a in w.letters if a < 0), out


def normalize(w: BraidWord) -> WeightedForm:
    """The weighted form of the group element spelled by w."""
    u, simples = _letter_factors(w)
    fs: list = []
    for f in simples:
        _insert_right(fs, f)
    u, raw = _strip(w.n, u, fs)
    return WeightedForm._from_raw(w.n, u, raw)


def from_factors(n: int, u: int, simples: Sequence[PermutationBraid]) -> WeightedForm:
    """Normalise Delta^u s_1 ... s_m for arbitrary simple s_j."""
    fs: list = []
    for s in simples:
        _check_same_n(n, s.n)
        _insert_right(fs, s.perm)
    u, raw = _strip(n, u, fs)
    return WeightedForm._from_raw(n, u, raw)


def mul(x: WeightedForm, y: WeightedForm) -> WeightedForm:
    _check_same_n(x.n, y.n)
    fs = _tau_all(x._raw, y.u)
    for f in y._raw:
        _insert_right(fs, f)
    u, raw = _strip(x.n, x.u + y.u, fs)
    return WeightedForm._from_raw(x.n, u, raw)


def mul_simple(x: WeightedForm, s: PermutationBraid) -> WeightedForm:
    """x . s for a simple s."""
    _check_same_n(x.n, s.n)
    fs = list(x._raw)
    _insert_right(fs, s.perm)
    u, raw = _strip(x.n, x.u, fs)
    return WeightedForm._from_raw(x.n, u, raw)


def simple_mul(s: PermutationBraid, x: WeightedForm) -> WeightedForm:
    """s . x for a simple s."""
    _check_same_n(x.n, s.n)
    # s Delta^u = Delta^u tau^u(s)
    t = _tau(s.perm) if x.u % 2 else s.perm
    fs = _insert_left(t, x._raw)
    u, raw = _strip(x.n, x.u, fs)
    return WeightedForm._from_raw(x.n, u, raw)


def inverse(x: WeightedForm) -> WeightedForm:
    """x^-1 = Delta^(-u-k) tau^(u+k)(x_k*) ... tau^(u+1)(x_1*)."""
    k = len(x._raw)
    fs: list = []
    for i in range(k, 0, -1):
        c = _right_complement(x._raw[i - 1])
        _insert_right(fs, _tau(c) if (x.u + i) % 2 else c)
    u, raw = _strip(x.n, -x.u - k, fs)
    return WeightedForm._from_raw(x.n, u, raw)


def power(x: WeightedForm, m: int) -> WeightedForm:
    if m < 0:
        return power(inverse(x), -m)
    result = WeightedForm.identity(x.n)
    base = x
    while m:
        if m & 1:
            result = mul(result, base)
        m >>= 1
        if m:
            base = mul(base, base)
    return result


def tau_power_apply(x: WeightedForm, m: int) -> WeightedForm:
    if m % 2 == 0:
        return x
    return WeightedForm._from_raw(x.n, x.u, [_tau(p) for p in x._raw])


def conjugate_by_simple(x: WeightedForm, t: PermutationBraid) -> WeightedForm:
    """t^-1 x t.  Uses t^-1 = Delta^-1 tau(t*), so t^-1 Delta^u X t = Delta^(u-1) tau^(u+1)(t*) X t."""
    _check_same_n(x.n, t.n)
    c = _right_complement(t.perm)
    if (x.u + 1) % 2:
        c = _tau(c)
    fs = _insert_left(c, x._raw)
    _insert_right(fs, t.perm)
    u, raw = _strip(x.n, x.u - 1, fs)
    return WeightedForm._from_raw(x.n, u, raw)


def conjugate(x: WeightedForm, c: WeightedForm) -> WeightedForm:
    """c^-1 x c."""
    return mul(inverse(c), mul(x, c))


def positive_factors(x: WeightedForm) -> list[PermutationBraid]:
    """For u >= 0, the left-greedy factors of the positive braid, Deltas written out."""
    if x.u < 0:
        raise ValueError("not a positive braid")
    return [_wrap(_w0(x.n))] * x.u + list(x.factors)


def reverse(x: WeightedForm) -> WeightedForm:
    """Normal form of the braid read backwards (sigma_i -> sigma_i, order reversed)."""
    # rev(Delta^u X) = rev(X) Delta^u = Delta^u tau^u(rev(X))
    fs: list = []
    for p in reversed(x._raw):
        q = _inverse(p)
        _insert_right(fs, _tau(q) if x.u % 2 else q)
    u, raw = _strip(x.n, x.u, fs)
    return WeightedForm._from_raw(x.n, u, raw)
