"""
Acceptance gate: ten criteria, each printing one PASS/FAIL line (collected in
the terminal summary). Criterion 3 inspects the whole session, so conftest
schedules it last.
"""

from __future__ import annotations

import itertools
import math
import random
import time

import pytest

from braidclass import (
    BraidWord,
    LatticeSide,
    WeightedForm,
    all_permutation_braids,
    classify,
    conjugate,
    cycling,
    decycling,
    garside_length,
    inverse,
    is_rigid,
    join,
    meet,
    mul,
    normalize,
    power,
    reduction_tree,
    sss_representative,
    standard_circle_orbit,
)
from braidclass import braid_core, oracle
from braidclass.cli import bench_rows, loglog_slope, random_by_length
from braidclass.conjugacy import cycle_to_rigid
from braidclass.corpus import rigid_reducible_conjugate
from braidclass.normal_form import INVARIANT_STATS
from braidclass.oracle import brute_join, brute_meet, exhaustive_reducibility_oracle, word_problem_equal
from braidclass.reducibility import ClassifierConfig, Verdict, recompute_orbit, rigid_circle_search

from strategies import random_rewrite

DESK = [
    ("3: 1 2", "periodic", None),
    ("3: 1 2 1", "periodic", None),
    ("3: 1 1", "reducible", (1, 2)),
    ("4: 1 3", "reducible", None),
    ("3: 1 -2", "pseudo_anosov", None),
    ("3:", "periodic", None),
]


def rand_word(rng, n, length):
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)))


@pytest.fixture(scope="module")
def desk_results():
    t0 = time.perf_counter()
    out = [(BraidWord.parse(text), classify(BraidWord.parse(text)), v, circ) for text, v, circ in DESK]
    return out, time.perf_counter() - t0


@pytest.fixture(scope="module")
def b3_results():
    rng = random.Random(2024)
    words = [rand_word(rng, 3, rng.randint(0, 10)) for _ in range(200)]
    return [(w, classify(w)) for w in words]


@pytest.fixture(scope="module")
def hidden_circle_family():
    rng = random.Random(77)
    fam = []
    for k in range(100):
        n = 3 if k % 10 < 3 else 4
        fam.append(rigid_reducible_conjugate(rng, n, hidden=n >= 4))
    return fam


# ---------------------------------------------------------------------------

def test_c1_lattice_oracle_equivalence(acceptance):
    braid_core._meet_left.cache_clear()
    oracle._scan_meet.cache_clear()
    oracle._scan_join.cache_clear()
    t0 = time.perf_counter()
    bad = pairs = 0
    for n in (3, 4):
        ps = all_permutation_braids(n)
        for side in (LatticeSide.LEFT, LatticeSide.RIGHT):
            for a, b in itertools.product(ps, ps):
                pairs += 1
                if meet(a, b, side) != brute_meet(a, b, side) or join(a, b, side) != brute_join(a, b, side):
                    bad += 1
    dt = time.perf_counter() - t0
    ok = bad == 0 and pairs == 2 * (36 + 576) and dt < 1.0
    acceptance(1, ok, f"lattice vs brute force: {pairs} ordered pairs (both sides), {bad} mismatches, {dt:.3f}s")
    assert ok


def test_c2_word_problem_soundness(acceptance):
    rng = random.Random(1)
    failures = 0
    for _ in range(1000):
        n = rng.choice((3, 4, 5))
        w = rand_word(rng, n, rng.randint(0, 40))
        x = normalize(w)
        v = w
        for _ in range(10):
            v = random_rewrite(rng, v)
            if normalize(v) != x:
                failures += 1
        if not mul(x, inverse(x)).is_identity() or not normalize(w * w.inverse()).is_identity():
            failures += 1
    acceptance(2, failures == 0, f"1000 words x 10 relation rewrites, plus w.w^-1: {failures} failures")
    assert failures == 0


@pytest.mark.run_last
def test_c3_structural_invariant_sweep(acceptance):
    checked, violations = INVARIANT_STATS["checked"], INVARIANT_STATS["violations"]
    ok = violations == 0 and checked > 0
    acceptance(3, ok, f"{checked} weighted forms checked during the session, {violations} violations")
    assert ok


def test_c4_cycling_contracts(acceptance):
    rng = random.Random(4)
    fails = rigid_seen = 0
    braids = []
    while len(braids) < 500:
        n = rng.choice((3, 4, 5))
        x = normalize(rand_word(rng, n, rng.randint(1, 20)))
        if x.factors:
            braids.append(x)
    # make sure rigid inputs are well represented: add rigid conjugates of some of them
    extra = []
    for x in braids[:150]:
        res = cycle_to_rigid(sss_representative(x).current, 300)
        if res.outcome == "rigid" and res.record.current.factors:
            extra.append(res.record.current)
    for x in braids + extra:
        c, t = cycling(x)
        d, g = decycling(x)
        if conjugate(x, WeightedForm.simple(t)) != c or conjugate(x, g) != d:
            fails += 1
        if c.inf < x.inf or c.sup > x.sup or d.inf < x.inf or d.sup > x.sup:
            fails += 1
        if is_rigid(x):
            rigid_seen += 1
            cur, k = x, x.canonical_length
            for _ in range(2 * k):
                cur, _ = cycling(cur)
                if not is_rigid(cur) or (cur.inf, cur.sup, cur.canonical_length) != (x.inf, x.sup, k):
                    fails += 1
                    break
            if cur != x:
                fails += 1
    ok = fails == 0 and rigid_seen > 0
    acceptance(4, ok, f"{len(braids)} random + {len(extra)} rigid braids, {rigid_seen} rigid inputs, {fails} failures")
    assert ok


def test_c5_desk_table(acceptance, desk_results):
    results, dt = desk_results
    wrong = []
    for w, c, expected, circ in results:
        got = c.verdict.value
        if got != expected or not c.verify():
            wrong.append(str(w))
        if circ is not None and (c.orbit is None or c.orbit.circle.to_tuple() != circ):
            wrong.append(f"{w} circle")
        try:
            if exhaustive_reducibility_oracle(w) != expected:
                wrong.append(f"{w} oracle")
        except oracle.BudgetExceeded:
            pass
    ok = not wrong and dt < 10.0
    table = ", ".join(f"[{w}]={c.verdict.value}" for w, c, _, _ in results)
    acceptance(5, ok, f"desk table in {dt:.3f}s: {table}" + (f"; wrong: {wrong}" if wrong else ""))
    assert ok


def test_c6_oracle_equivalence_b3(acceptance, b3_results):
    bad = [str(w) for w, c in b3_results if c.verdict.value != exhaustive_reducibility_oracle(w)]
    counts = {v.value: sum(c.verdict is v for _, c in b3_results) for v in Verdict}
    ok = not bad
    acceptance(6, ok, f"200 random B_3 words: {len(bad)} disagreements with the exhaustive oracle; verdicts {counts}")
    assert ok


def test_c7_tame_power_and_rigid_conjugate(acceptance, desk_results, b3_results):
    cases = [(w, c) for w, c, _, _ in desk_results[0]] + list(b3_results)
    pa = [(w, c) for w, c in cases if c.verdict is Verdict.PSEUDO_ANOSOV]
    bad = []
    for w, c in pa:
        D = garside_length(w.n)
        if c.M is None or c.M > D * D or c.N is None:
            bad.append(str(w))
            continue
        y = power(sss_representative(power(normalize(w), c.M)).current, 2 * D)
        cur = y
        for _ in range(c.N):
            cur, _ = cycling(cur)
        if not is_rigid(cur) or cur != c.record.current:
            bad.append(str(w))
    ok = not bad and len(pa) > 0
    ms = sorted({c.M for _, c in pa})
    acceptance(7, ok, f"{len(pa)} pseudo-Anosov verdicts: M values {ms} (<= 9), rigid c^N(y^2D) re-verified; {len(bad)} failures")
    assert ok


def test_c8_rigid_search_recovers_circles(acceptance, hidden_circle_family):
    hits = hidden = 0
    for x, z in hidden_circle_family:
        assert is_rigid(z)
        if standard_circle_orbit(z) is None:
            hidden += 1
        hit, _ = rigid_circle_search(z, ClassifierConfig())
        if hit is not None:
            t, zt, orbit = hit
            if is_rigid(zt) and recompute_orbit(zt, orbit) and zt == conjugate(z, WeightedForm.simple(t)):
                hits += 1
    ok = hits == len(hidden_circle_family) == 100
    acceptance(8, ok, f"{hits}/100 rigid reducible t-conjugates recovered ({hidden} with no circle on z itself)")
    assert ok


def test_c9_reduction_tree_soundness(acceptance, desk_results, b3_results, hidden_circle_family):
    words = [w for w, c, _, _ in desk_results[0] if c.verdict is Verdict.REDUCIBLE]
    words += [w for w, c in b3_results if c.verdict is Verdict.REDUCIBLE]
    words += [z for _, z in hidden_circle_family]
    splits = bad = 0
    for w in words:
        tree = reduction_tree(w)
        for node in tree.walk():
            sp = node.split
            if sp is None:
                continue
            splits += 1
            o = sp.orbit
            counts_ok = (sp.exterior.n == sp.braid.n - o.size * o.circle.width + o.size
                         and all(f.n == o.circle.width for f in sp.interiors))
            if not counts_ok or not word_problem_equal(sp.reembedded(), sp.braid.word()):
                bad += 1
    ok = bad == 0 and splits >= len(words)
    acceptance(9, ok, f"{len(words)} reducible braids, {splits} splits re-embedded and checked by the oracle word problem, {bad} failures")
    assert ok


def test_c10_scaling_smoke(acceptance):
    entries = random_by_length(10, 4, list(range(5, 41, 5)), 3)
    rows = bench_rows(entries, ClassifierConfig())
    worst = max(r["seconds"] for r in rows)
    slope = loglog_slope(rows)
    total = sum(r["seconds"] for r in rows)
    ok = worst < 2.0 and slope <= 3.5
    acceptance(10, ok, f"B_4 canonical lengths 5..40 ({len(rows)} braids): max {worst * 1000:.1f} ms, "
                       f"total {total:.2f}s, log-log slope {slope:.2f} (<= 3.5)")
    assert ok
    assert math.isfinite(slope)
