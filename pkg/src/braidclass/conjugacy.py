"""
Cycling, decycling, super summit representatives, tameness and rigidity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .braid_core import (
    LatticeSide,
    PermutationBraid,
    _identity,
    _inversions,
    _is_prefix_left,
    _right_complement,
    _right_descents,
    _swap_positions,
    _tau,
    _wrap,
)
from .errors import NoFactors, NotRigid
from .normal_form import (
    WeightedForm,
    _insert_left,
    _insert_right,
    _strip,
    _weighted,
    conjugate,
    conjugate_by_simple,
    inverse,
    mul,
    mul_simple,
    reverse,
)


def garside_length(n: int) -> int:
    """D = n(n-1)/2, the number of crossings in Delta."""
    return n * (n - 1) // 2


@dataclass(frozen=True)
class ConjugationRecord:
    """Witness that conjugator^-1 . base . conjugator == current."""

    base: WeightedForm
    conjugator: WeightedForm
    current: WeightedForm

    @classmethod
    def trivial(cls, x: WeightedForm) -> ConjugationRecord:
        return cls(x, WeightedForm.identity(x.n), x)

    def extend(self, c: WeightedForm, current: WeightedForm) -> ConjugationRecord:
        return ConjugationRecord(self.base, mul(self.conjugator, c), current)

    def extend_simple(self, t: PermutationBraid, current: WeightedForm) -> ConjugationRecord:
        return ConjugationRecord(self.base, mul_simple(self.conjugator, t), current)

    def verify(self) -> bool:
        return conjugate(self.base, self.conjugator) == self.current

    def to_dict(self) -> dict:
        return {
            "base": self.base.to_dict(),
            "conjugator": self.conjugator.to_dict(),
            "current": self.current.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> ConjugationRecord:
        return cls(*(WeightedForm.from_dict(data[k]) for k in ("base", "conjugator", "current")))


# ---------------------------------------------------------------------------
# cycling and decycling
# ---------------------------------------------------------------------------

def cycling(x: WeightedForm) -> tuple[WeightedForm, PermutationBraid]:
    """c(x) = Delta^u x_2 ... x_k tau^u(x_1), returned with the conjugator tau^u(x_1)."""
    if not x.factors:
        raise NoFactors("cycling is undefined on a power of Delta")
    raw = x._raw
    t = _tau(raw[0]) if x.u % 2 else raw[0]
    fs = list(raw[1:])
    _insert_right(fs, t)
    return _finish(x.n, x.u, fs), _wrap(t)


def decycling(x: WeightedForm) -> tuple[WeightedForm, WeightedForm]:
    """d(x) = T x T^-1 with T the tail; the returned conjugator is T^-1."""
    if not x.factors:
        raise NoFactors("decycling is undefined on a power of Delta")
    raw = x._raw
    t = _tau(raw[-1]) if x.u % 2 else raw[-1]
    fs = _insert_left(t, raw[:-1])
    return _finish(x.n, x.u, fs), inverse(WeightedForm.simple(x.factors[-1]))


def _finish(n: int, u: int, fs: list) -> WeightedForm:
    u, raw = _strip(n, u, fs)
    return WeightedForm._from_raw(n, u, raw)


def sss_representative(x: WeightedForm, literal_bounds: bool = False) -> ConjugationRecord:
    """
    Move x into its super summit set: iterated cycling raises inf to inf_c, then
    iterated decycling lowers sup to sup_c.

    Each phase runs at most l(x)*D steps. Unless ``literal_bounds`` is set, a phase
    stops once D consecutive steps bring no improvement: a non-maximal inf always
    improves within D cyclings (dually for sup and decycling).
    """
    D = garside_length(x.n)
    rec = ConjugationRecord.trivial(x)
    cur = x
    budget = len(cur.factors) * D
    stall = 0
    for _ in range(budget):
        if not cur.factors or (not literal_bounds and stall >= D):
            break
        nxt, t = cycling(cur)
        stall = 0 if nxt.inf > cur.inf else stall + 1
        cur = nxt
        rec = rec.extend_simple(t, cur)
    budget = len(cur.factors) * D
    stall = 0
    for _ in range(budget):
        if not cur.factors or (not literal_bounds and stall >= D):
            break
        nxt, c = decycling(cur)
        stall = 0 if nxt.sup < cur.sup else stall + 1
        cur = nxt
        rec = rec.extend(c, cur)
    return rec


# ---------------------------------------------------------------------------
# rigidity and tameness
# ---------------------------------------------------------------------------

def is_rigid(x: WeightedForm) -> bool:
    """True iff l(x) = 0 or the tail is left-weighted against tau^u(head)."""
    if not x.factors:
        return True
    raw = x._raw
    h = _tau(raw[0]) if x.u % 2 else raw[0]
    return _weighted(raw[-1], h)


def is_i_rigid(x: WeightedForm, i: int, side: LatticeSide = LatticeSide.LEFT) -> bool:
    k = len(x.factors)
    if not 1 <= i <= k:
        raise ValueError(f"i={i} outside 1..{k}")
    if side is LatticeSide.RIGHT:
        return is_i_rigid(reverse(x), i, LatticeSide.LEFT)
    raw = x._raw
    fs = list(raw)
    _insert_right(fs, _tau(raw[0]) if x.u % 2 else raw[0])
    return tuple(fs[:i]) == raw[:i]


def is_tame_up_to(x: WeightedForm, bound: int) -> bool:
    if bound < 1:
        raise ValueError("bound must be >= 1")
    p = x
    for i in range(1, bound + 1):
        if i > 1:
            p = mul(p, x)
        if p.inf != i * x.inf or p.sup != i * x.sup:
            return False
    return True


# ---------------------------------------------------------------------------
# iterated cycling to a rigid conjugate
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CyclingSearch:
    """Outcome of iterating cycling: rigid found, orbit closed without one, or cap hit."""

    N: Optional[int]
    record: ConjugationRecord
    outcome: str  # "rigid" | "cycle" | "cap"
    steps: int
    orbit: tuple[WeightedForm, ...] = ()


def cycle_to_rigid(x: WeightedForm, cap: int, keep_orbit: bool = False) -> CyclingSearch:
    rec = ConjugationRecord.trivial(x)
    cur = x
    seen = set()
    orbit = []
    for N in range(cap + 1):
        if is_rigid(cur):
            return CyclingSearch(N, rec, "rigid", N, tuple(orbit))
        key = cur.key()
        if key in seen:
            return CyclingSearch(None, rec, "cycle", N, tuple(orbit))
        seen.add(key)
        if keep_orbit:
            orbit.append(cur)
        if N == cap:
            break
        cur, t = cycling(cur)
        rec = rec.extend_simple(t, cur)
    return CyclingSearch(None, rec, "cap", cap, tuple(orbit))


def iterated_cycling_to_rigid(x: WeightedForm, cap: int) -> Optional[tuple[int, ConjugationRecord]]:
    """Least N <= cap with c^N(x) rigid, with its conjugation record; None if there is none."""
    res = cycle_to_rigid(x, cap)
    if res.outcome != "rigid":
        return None
    return res.N, res.record


# ---------------------------------------------------------------------------
# rigidity-preserving simple conjugators
# ---------------------------------------------------------------------------

class RigidConjugators:
    """
    The simple elements t with t^-1 x t rigid, for a fixed rigid x.

    Membership is memoised, so any sequence of queries costs at most n!
    conjugations. The set is closed under meets, which makes "the least member
    above p" well defined; it is found breadth-first by length.
    """

    def __init__(self, x: WeightedForm):
        if not is_rigid(x):
            raise NotRigid(f"{x} is not rigid")
        self.x = x
        self.n = x.n
        self._memo: dict[tuple, Optional[WeightedForm]] = {}

    @property
    def tested(self) -> int:
        return len(self._memo)

    def conjugate(self, t: tuple) -> Optional[WeightedForm]:
        """t^-1 x t if rigid, else None."""
        if t not in self._memo:
            y = conjugate_by_simple(self.x, _wrap(t))
            self._memo[t] = y if is_rigid(y) else None
        return self._memo[t]

    def contains(self, t: tuple) -> bool:
        return self.conjugate(t) is not None

    def least_above(self, p: tuple) -> list[tuple]:
        """Members of minimal length among those having p as a prefix (one, by meet closure)."""
        level = {p}
        while level:
            hits = sorted(t for t in level if self.contains(t))
            if hits:
                return hits
            nxt = set()
            for t in level:
                rd = _right_descents(t)
                for j in range(1, self.n):
                    if not rd >> j & 1:
                        nxt.add(_swap_positions(t, j))
            level = nxt
        return []

    def minimal(self) -> list[tuple]:
        e = _identity(self.n)
        cands = set()
        for j in range(1, self.n):
            cands.update(self.least_above(_swap_positions(e, j)))
        mins = [c for c in cands if not any(d != c and _is_prefix_left(d, c) for d in cands)]
        return sorted(mins, key=lambda t: (_len(t), t))

    def closure(self) -> Iterator[tuple]:
        """
        Every member reachable from e by repeatedly stepping to the least member
        above t.sigma_j; by meet closure this is all of them. Yielded in BFS order.
        """
        e = _identity(self.n)
        seen = {e}
        frontier = [e]
        yield e
        while frontier:
            nxt = []
            for t in frontier:
                rd = _right_descents(t)
                for j in range(1, self.n):
                    if rd >> j & 1:
                        continue
                    for s in self.least_above(_swap_positions(t, j)):
                        if s not in seen:
                            seen.add(s)
                            nxt.append(s)
                            yield s
            frontier = sorted(nxt, key=lambda t: (_len(t), t))


def _len(t: tuple) -> int:
    return _inversions(t)


def minimal_rigid_conjugators(x: WeightedForm) -> list[PermutationBraid]:
    """The prefix-minimal nontrivial simple t with t^-1 x t rigid."""
    return [_wrap(t) for t in RigidConjugators(x).minimal()]


def head_and_tail_bounds(x: WeightedForm) -> tuple[PermutationBraid, PermutationBraid]:
    """(tau^inf(H(x)), T(x)*): minimal rigidity-preserving conjugators are prefixes of one of these."""
    raw = x._raw
    h = _tau(raw[0]) if x.u % 2 else raw[0]
    return _wrap(h), _wrap(_right_complement(raw[-1]))
