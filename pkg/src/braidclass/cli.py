"""
Command-line front end.

    braidclass nf "3: 1 -2"
    braidclass classify "3: 1 1" --json
    braidclass reduce "4: 1 3"
    braidclass gen-corpus --seed 1 --count 30 --out corpus.txt
    braidclass bench --seed 1

Exit status: 0 on success, 1 on malformed input, 2 if any classification is
inconclusive, 3 if ``--verify`` finds a disagreement.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import statistics
import sys
import time
from contextlib import redirect_stdout
from typing import Optional, Sequence

from .braid_core import BraidWord, _canonical_word
from .conjugacy import (
    RigidConjugators,
    cycle_to_rigid,
    garside_length,
    is_rigid,
    sss_representative,
)
from .corpus import CorpusEntry, generate, random_word
from .errors import BraidError, BudgetExceeded
from .normal_form import normalize
from .oracle import exhaustive_reducibility_oracle
from .reducibility import Classification, ClassifierConfig, Verdict, classify, reduction_tree

EXIT_OK, EXIT_MALFORMED, EXIT_INCONCLUSIVE, EXIT_MISMATCH = 0, 1, 2, 3


# ---------------------------------------------------------------------------
# input
# ---------------------------------------------------------------------------

def _read_entries(args) -> list[CorpusEntry]:
    lines = list(args.braids)
    if args.input:
        with open(args.input) as fh:
            lines.extend(fh.read().splitlines())
    out = []
    for line in lines:
        body, _, comment = line.partition("#")
        if not body.strip():
            continue
        tags = dict(tok.split("=", 1) for tok in comment.split() if "=" in tok)
        out.append(CorpusEntry(BraidWord.parse(body), tags.get("expected"), tags.get("family", "input")))
    if not out:
        raise BraidError("no braid given")
    return out


def _config(args) -> ClassifierConfig:
    return ClassifierConfig(
        naive_cap=args.naive_cap,
        literal_bounds=args.literal_bounds,
        max_cyclings=args.max_cyclings,
    )


def _report(c: Classification, timing: bool) -> dict:
    d = c.to_dict()
    if not timing:
        d["stats"]["wall_ms"] = 0
    return d


def _dump(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_nf(args) -> int:
    for e in _read_entries(args):
        x = normalize(e.word)
        if args.json:
            d = x.to_dict()
            d.update(inf=x.inf, sup=x.sup, length=x.canonical_length,
                     words=[list(_canonical_word(p)) for p in x._raw])
            _dump(d)
            continue
        print(f"{e.word}")
        print(f"  Delta^{x.u}, inf={x.inf} sup={x.sup} len={x.canonical_length}")
        for k, p in enumerate(x.factors, 1):
            print(f"  x{k} = {' '.join(map(str, _canonical_word(p.perm))) or 'e'}   perm {list(p.perm)}")
    return EXIT_OK


def cmd_classify(args) -> int:
    cfg = _config(args)
    code = EXIT_OK
    for e in _read_entries(args):
        c = classify(e.word, cfg)
        rep = _report(c, args.timing)
        if c.verdict is Verdict.INCONCLUSIVE:
            code = max(code, EXIT_INCONCLUSIVE)
        if args.verify:
            check = {"witness": c.verify()}
            try:
                check["oracle"] = exhaustive_reducibility_oracle(e.word)
            except BudgetExceeded:
                check["oracle"] = None
            if e.expected:
                check["expected"] = e.expected
            agree = check["witness"] and all(
                v == c.verdict.value for k, v in check.items() if k != "witness" and v is not None)
            check["agree"] = agree
            rep["verify"] = check
            if not agree:
                code = EXIT_MISMATCH
        if args.json:
            _dump({"braid": str(e.word), **rep})
            continue
        line = f"{e.word}  ->  {c.verdict.value}"
        if c.orbit is not None:
            line += f"  circle ({c.orbit.circle.i},{c.orbit.circle.j}) period {c.orbit.period}"
        if c.M is not None:
            line += f"  M={c.M}"
        if c.N is not None:
            line += f"  N={c.N}"
        if c.witness_absent:
            line += "  (no circle witness)"
        if c.diagnostic:
            line += f"  [{c.diagnostic}]"
        if args.verify:
            v = rep["verify"]
            line += f"  verify: witness={'ok' if v['witness'] else 'FAIL'} oracle={v['oracle'] or 'skipped'}"
            if not v["agree"]:
                line += "  MISMATCH"
        print(line)
    return code


def cmd_reduce(args) -> int:
    cfg = _config(args)
    code = EXIT_OK
    for e in _read_entries(args):
        tree = reduction_tree(e.word, cfg)
        if tree.inconclusive:
            code = EXIT_INCONCLUSIVE
        if args.json:
            rep = _report(tree.classification, args.timing)
            rep["tree"] = [tree.to_dict()]
            _dump({"braid": str(e.word), **rep})
        else:
            print(tree.render())
    return code


def cmd_rigid(args) -> int:
    for e in _read_entries(args):
        x = normalize(e.word)
        cap = args.max_cyclings if args.max_cyclings is not None else 1000
        res = cycle_to_rigid(x, cap)
        out = {"braid": str(e.word), "rigid": is_rigid(x), "outcome": res.outcome, "N": res.N}
        if res.outcome == "rigid":
            z = res.record.current
            out["rigid_conjugate"] = z.to_dict()
            if z.factors:
                out["minimal_conjugators"] = [list(t) for t in RigidConjugators(z).minimal()]
        if args.json:
            _dump(out)
        else:
            print(f"{e.word}: rigid={out['rigid']}  cycling -> {res.outcome}" + (f" after N={res.N}" if res.N is not None else ""))
            if "rigid_conjugate" in out:
                print(f"  rigid conjugate {res.record.current}")
                for t in out.get("minimal_conjugators", []):
                    print(f"  minimal rigid conjugator {t}")
    return EXIT_OK


def cmd_sss(args) -> int:
    for e in _read_entries(args):
        x = normalize(e.word)
        rec = sss_representative(x, args.literal_bounds)
        s = rec.current
        if args.json:
            _dump({"braid": str(e.word), "inf_c": s.inf, "sup_c": s.sup, "record": rec.to_dict()})
        else:
            print(f"{e.word}: inf_c={s.inf} sup_c={s.sup}")
            print(f"  representative {s}")
            print(f"  conjugator {rec.conjugator}")
    return EXIT_OK


def cmd_gen_corpus(args) -> int:
    ns = tuple(int(v) for v in args.n.split(","))
    for entry in generate(args.seed, args.count, ns, args.max_len):
        print(entry.line())
    return EXIT_OK


def bench_rows(entries: Sequence[CorpusEntry], cfg: ClassifierConfig) -> list[dict]:
    rows = []
    for e in entries:
        x = normalize(e.word)
        t0 = time.perf_counter()
        c = classify(x, cfg)
        dt = time.perf_counter() - t0
        rows.append({"n": x.n, "length": x.canonical_length, "seconds": dt, "verdict": c.verdict.value,
                     "expected": e.expected})
    return rows


def random_by_length(seed: int, n: int, lengths: Sequence[int], per_length: int) -> list[CorpusEntry]:
    """Random words in B_n filtered to hit each requested canonical length."""
    rng = random.Random(seed)
    out = []
    D = garside_length(n)
    for target in lengths:
        got = 0
        while got < per_length:
            w = random_word(rng, n, max(1, int(target * D / 2.7)))
            if normalize(w).canonical_length == target:
                out.append(CorpusEntry(w, family=f"len{target}"))
                got += 1
    return out


def loglog_slope(rows: Sequence[dict]) -> float:
    """Least-squares slope of log(mean seconds) against log(canonical length)."""
    by_len: dict[int, list[float]] = {}
    for r in rows:
        if r["length"] > 0:
            by_len.setdefault(r["length"], []).append(r["seconds"])
    xs = [math.log(k) for k in sorted(by_len)]
    ys = [math.log(max(statistics.fmean(by_len[k]), 1e-9)) for k in sorted(by_len)]
    return statistics.linear_regression(xs, ys).slope


def cmd_bench(args) -> int:
    cfg = _config(args)
    if args.input or args.braids:
        entries = _read_entries(args)
    else:
        lengths = list(range(args.min_len, args.max_len + 1, args.step))
        entries = random_by_length(args.seed, args.n, lengths, args.per_length)
    rows = bench_rows(entries, cfg)
    by_len: dict[int, list[dict]] = {}
    for r in rows:
        by_len.setdefault(r["length"], []).append(r)
    print("length\tcount\tmean_ms\tmax_ms")
    for k in sorted(by_len):
        ts = [r["seconds"] * 1000 for r in by_len[k]]
        print(f"{k}\t{len(ts)}\t{statistics.fmean(ts):.2f}\t{max(ts):.2f}")
    if len(by_len) >= 2:
        print(f"# log-log slope {loglog_slope(rows):.3f}")
    mism = [r for r in rows if r["expected"] and r["expected"] != r["verdict"]]
    if mism:
        print(f"# {len(mism)} verdicts differ from the expected annotation")
        return EXIT_MISMATCH
    return EXIT_INCONCLUSIVE if any(r["verdict"] == "inconclusive" for r in rows) else EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="one JSON report per braid")
    common.add_argument("--verify", action="store_true", help="recheck witnesses and compare with the exhaustive oracle")
    common.add_argument("--naive-cap", type=int, default=6, help="largest n for the exhaustive conjugator sweep")
    common.add_argument("--literal-bounds", action="store_true", help="run summit searches for their full worst-case lengths")
    common.add_argument("--max-cyclings", type=int, default=None, help="cap on cyclings while looking for a rigid conjugate")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", default=None, help="write output to this file")
    common.add_argument("--timing", action="store_true", help="report wall times (otherwise zeroed for reproducible output)")

    words = argparse.ArgumentParser(add_help=False)
    words.add_argument("braids", nargs="*", help='braid words such as "3: 1 -2"')
    words.add_argument("-i", "--input", help="corpus file, one braid per line")

    p = argparse.ArgumentParser(prog="braidclass", description=__doc__.split("\n\n")[0].strip())
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("nf", parents=[common, words], help="weighted normal form").set_defaults(func=cmd_nf)
    sub.add_parser("classify", parents=[common, words], help="periodic / reducible / pseudo-Anosov").set_defaults(func=cmd_classify)
    sub.add_parser("reduce", parents=[common, words], help="recursive reduction tree").set_defaults(func=cmd_reduce)
    sub.add_parser("rigid", parents=[common, words], help="rigidity and rigid conjugates").set_defaults(func=cmd_rigid)
    sub.add_parser("sss", parents=[common, words], help="super summit representative").set_defaults(func=cmd_sss)
    g = sub.add_parser("gen-corpus", parents=[common], help="labelled random corpus")
    g.add_argument("--count", type=int, default=30)
    g.add_argument("--n", default="3,4", help="comma-separated strand counts")
    g.add_argument("--max-len", type=int, default=10)
    g.set_defaults(func=cmd_gen_corpus)
    b = sub.add_parser("bench", parents=[common, words], help="time classify against canonical length")
    b.add_argument("--n", type=int, default=4)
    b.add_argument("--min-len", type=int, default=5)
    b.add_argument("--max-len", type=int, default=40)
    b.add_argument("--step", type=int, default=5)
    b.add_argument("--per-length", type=int, default=3)
    b.set_defaults(func=cmd_bench)
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_MALFORMED if exc.code else EXIT_OK
    try:
        if args.out:
            with open(args.out, "w") as fh, redirect_stdout(fh):
                return args.func(args)
        return args.func(args)
    except (BraidError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


def main() -> None:
    sys.exit(run())


__all__ = ["run", "main", "build_parser", "bench_rows", "random_by_length", "loglog_slope"]
