"""
Brute-force reference implementations, used to validate the production code.

Nothing here touches :mod:`braidclass.normal_form`'s normalisation path. The
oracle has its own permutation helpers, computes meets by scanning all of S_n,
and normalises by repeated full sliding passes until nothing moves. The only
shared piece is the standard-circle test, which the oracle applies to every
element of an exhaustively enumerated super summit set.
"""

from __future__ import annotations

import functools
import itertools
from collections import deque
from dataclasses import dataclass

from .braid_core import BraidWord, LatticeSide, PermutationBraid, _check_same_n
from .errors import BudgetExceeded

_Perm = tuple[int, ...]


@dataclass(frozen=True)
class OracleBudget:
    max_n: int = 4
    max_word_len: int = 12
    max_sss: int = 20000

    def __post_init__(self):
        if min(self.max_n, self.max_word_len, self.max_sss) <= 0:
            raise ValueError("oracle caps must be positive")


DEFAULT_BUDGET = OracleBudget()


# ---------------------------------------------------------------------------
# independent permutation helpers
# ---------------------------------------------------------------------------

def _o_comp(p: _Perm, q: _Perm) -> _Perm:
    return tuple(p[q[k] - 1] for k in range(len(q)))


def _o_inv(p: _Perm) -> _Perm:
    return tuple(sorted(range(1, len(p) + 1), key=lambda k: p[k - 1]))


def _o_len(p: _Perm) -> int:
    return sum(p[i] > p[j] for i, j in itertools.combinations(range(len(p)), 2))


def _o_delta(n: int) -> _Perm:
    return tuple(reversed(range(1, n + 1)))


def _o_gen(n: int, i: int) -> _Perm:
    p = list(range(1, n + 1))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def _o_tau(p: _Perm) -> _Perm:
    d = _o_delta(len(p))
    return _o_comp(d, _o_comp(p, d))


def _o_prefix(a: _Perm, b: _Perm) -> bool:
    return _o_len(a) + _o_len(_o_comp(_o_inv(a), b)) == _o_len(b)


def _o_rprefix(a: _Perm, b: _Perm) -> bool:
    return _o_len(_o_comp(b, _o_inv(a))) + _o_len(a) == _o_len(b)


@functools.lru_cache(maxsize=None)
def _all(n: int) -> tuple[_Perm, ...]:
    return tuple(itertools.permutations(range(1, n + 1)))


# ---------------------------------------------------------------------------
# enumeration and lattice scans
# ---------------------------------------------------------------------------

def enumerate_permutation_braids(n: int, budget: OracleBudget = DEFAULT_BUDGET) -> list[PermutationBraid]:
    """All n! permutation braids (each carries .word() and .length)."""
    if n > budget.max_n + 2:
        raise BudgetExceeded(f"n={n} exceeds enumeration cap {budget.max_n + 2}")
    return [PermutationBraid(n, p) for p in _all(n)]


def _check_n(n: int, budget: OracleBudget) -> None:
    if n > budget.max_n + 1:
        raise BudgetExceeded(f"brute lattice scan at n={n} exceeds cap")


@functools.lru_cache(maxsize=None)
def _scan_meet(a: _Perm, b: _Perm, right: bool) -> _Perm:
    test = _o_rprefix if right else _o_prefix
    best = None
    for c in _all(len(a)):
        if test(c, a) and test(c, b) and (best is None or _o_len(c) > _o_len(best)):
            best = c
    return best


@functools.lru_cache(maxsize=None)
def _scan_join(a: _Perm, b: _Perm, right: bool) -> _Perm:
    test = _o_rprefix if right else _o_prefix
    best = None
    for c in _all(len(a)):
        if test(a, c) and test(b, c) and (best is None or _o_len(c) < _o_len(best)):
            best = c
    return best


def brute_meet(a: PermutationBraid, b: PermutationBraid, side: LatticeSide = LatticeSide.LEFT,
               budget: OracleBudget = DEFAULT_BUDGET) -> PermutationBraid:
    _check_same_n(a.n, b.n)
    _check_n(a.n, budget)
    return PermutationBraid(a.n, _scan_meet(a.perm, b.perm, side is LatticeSide.RIGHT))


def brute_join(a: PermutationBraid, b: PermutationBraid, side: LatticeSide = LatticeSide.LEFT,
               budget: OracleBudget = DEFAULT_BUDGET) -> PermutationBraid:
    _check_same_n(a.n, b.n)
    _check_n(a.n, budget)
    return PermutationBraid(a.n, _scan_join(a.perm, b.perm, side is LatticeSide.RIGHT))


# ---------------------------------------------------------------------------
# independent normal form: global Delta extraction, then sliding to a fixpoint
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _o_slide(a: _Perm, b: _Perm) -> tuple[_Perm, _Perm]:
    astar = _o_comp(_o_inv(a), _o_delta(len(a)))
    s = _scan_meet(astar, b, False)
    return _o_comp(a, s), _o_comp(_o_inv(s), b)


def _o_settle(n: int, u: int, fs: list) -> tuple[int, tuple]:
    fs = list(fs)
    changed = True
    while changed:
        changed = False
        for i in range(len(fs) - 1):
            a2, b2 = _o_slide(fs[i], fs[i + 1])
            if a2 != fs[i]:
                fs[i], fs[i + 1] = a2, b2
                changed = True
    d, e = _o_delta(n), tuple(range(1, n + 1))
    fs = [f for f in fs if f != e]  # identities sink to the end at the fixpoint
    while fs and fs[0] == d:
        fs.pop(0)
        u += 1
    return u, tuple(fs)


def _o_normal(n: int, letters) -> tuple[int, tuple]:
    # scan right to left; every Delta^-1 already collected passes the new factor
    d = _o_delta(n)
    pulled = 0
    rev = []
    for a in reversed(letters):
        if a > 0:
            f = _o_gen(n, a)
        else:
            f = _o_comp(d, _o_gen(n, -a))
        if pulled % 2:
            f = _o_tau(f)
        rev.append(f)
        if a < 0:
            pulled += 1
    return _o_settle(n, -pulled, rev[::-1])


def oracle_word(n: int, u: int, fs) -> BraidWord:
    """A word for Delta^u f_1 ... f_k (bubble-sort words, independent of the canonical one)."""
    def simple_word(p):
        p = list(p)
        out = []
        # p = s_i1 o ... o s_ik; peel generators off the right by sorting positions
        while True:
            for i in range(len(p) - 1):
                if p[i] > p[i + 1]:
                    p[i], p[i + 1] = p[i + 1], p[i]
                    out.append(i + 1)
                    break
            else:
                return out[::-1]

    dw = simple_word(_o_delta(n))
    letters = dw * u if u >= 0 else [-a for a in reversed(dw)] * (-u)
    for f in fs:
        letters += simple_word(f)
    return BraidWord(n, tuple(letters))


def oracle_normal_form(w: BraidWord) -> tuple[int, tuple[_Perm, ...]]:
    return _o_normal(w.n, w.letters)


def word_problem_equal(w1: BraidWord, w2: BraidWord) -> bool:
    _check_same_n(w1.n, w2.n)
    u, fs = _o_normal(w1.n, list(w1.letters) + [-a for a in reversed(w2.letters)])
    return u == 0 and not fs


# ---------------------------------------------------------------------------
# exhaustive classification
# ---------------------------------------------------------------------------

def _o_conj(n: int, u: int, fs: tuple, t: _Perm) -> tuple[int, tuple]:
    """t^-1 (Delta^u F) t = Delta^(u-1) tau^(u+1)(t*) F t."""
    tstar = _o_comp(_o_inv(t), _o_delta(n))
    if (u + 1) % 2:
        tstar = _o_tau(tstar)
    return _o_settle(n, u - 1, [tstar, *fs, t])


def _o_cycle(n, u, fs):
    h = _o_tau(fs[0]) if u % 2 else fs[0]
    return _o_settle(n, u, [*fs[1:], h])


def _o_decycle(n, u, fs):
    t = _o_tau(fs[-1]) if u % 2 else fs[-1]
    return _o_settle(n, u, [t, *fs[:-1]])


def _o_climb(n: int, u: int, fs: tuple) -> tuple[int, tuple]:
    """Literal l*D cyclings then l*D decyclings: lands in the super summit set."""
    D = n * (n - 1) // 2
    for _ in range(len(fs) * D):
        if not fs:
            break
        u, fs = _o_cycle(n, u, fs)
    for _ in range(len(fs) * D):
        if not fs:
            break
        u, fs = _o_decycle(n, u, fs)
    return u, fs


def super_summit_set(w: BraidWord, budget: OracleBudget = DEFAULT_BUDGET) -> list[tuple[int, tuple]]:
    """All of SSS(w) as oracle normal forms, by closure under simple conjugation."""
    n = w.n
    u, fs = _o_climb(n, *_o_normal(n, w.letters))
    nontrivial = [t for t in _all(n) if t != tuple(range(1, n + 1))]
    while True:
        best = (u, u + len(fs))
        seen = {(u, fs)}
        queue = deque(seen)
        improved = None
        while queue and improved is None:
            cu, cf = queue.popleft()
            for t in nontrivial:
                vu, vf = _o_conj(n, cu, cf, t)
                key = (vu, vu + len(vf))
                if key == best:
                    if (vu, vf) not in seen:
                        seen.add((vu, vf))
                        queue.append((vu, vf))
                        if len(seen) > budget.max_sss:
                            raise BudgetExceeded(f"super summit set exceeds {budget.max_sss}")
                elif vu >= best[0] and vu + len(vf) <= best[1]:
                    improved = (vu, vf)
                    break
        if improved is None:
            return sorted(seen)
        u, fs = improved


def exhaustive_reducibility_oracle(w: BraidWord, budget: OracleBudget = DEFAULT_BUDGET) -> str:
    """
    Verdict string ("periodic", "reducible", "pseudo_anosov") by brute force.

    Periodic iff w^(n(n-1)) is a power of Delta (every periodic braid is conjugate
    to a power of sigma_1...sigma_{n-1} or of sigma_1^2 sigma_2...sigma_{n-1}, whose
    n-th resp. (n-1)-th powers are central). Otherwise reducible iff some element of
    the super summit set carries a standard circle orbit.
    """
    from .normal_form import WeightedForm
    from .reducibility import standard_circle_orbit

    n = w.n
    if n <= 2:
        return "periodic"
    if n > budget.max_n or (n > 3 and len(w) > budget.max_word_len):
        raise BudgetExceeded(f"exhaustive classification of {w} is outside the oracle budget")
    pu, pf = _o_normal(n, list(w.letters) * (n * (n - 1)))
    if not pf:
        return "periodic"
    for u, fs in super_summit_set(w, budget):
        if fs and standard_circle_orbit(WeightedForm._from_raw(n, u, fs)) is not None:
            return "reducible"
    return "pseudo_anosov"
