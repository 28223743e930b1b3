"""Classify a labelled corpus and cross-check every verdict against the brute-force oracle.

    python scripts/desk_table.py --seed 3 --count 60
"""

from __future__ import annotations

import argparse
import time
from collections import Counter
from dataclasses import dataclass

from braidclass import BraidWord, classify
from braidclass.corpus import KNOWN, CorpusEntry, generate
from braidclass.errors import BudgetExceeded
from braidclass.oracle import exhaustive_reducibility_oracle
from braidclass.reducibility import ClassifierConfig


@dataclass
class DeskConfig:
    seed: int = 3
    count: int = 60
    n_values: tuple[int, ...] = (3, 4)
    max_len: int = 10


def run(cfg: DeskConfig) -> Counter:
    entries = [CorpusEntry(BraidWord.parse(t), v, "known") for t, v in KNOWN] + generate(cfg.seed, cfg.count, cfg.n_values, cfg.max_len)
    tally: Counter = Counter()
    print(f"{'braid':<32} {'expected':<14} {'verdict':<14} {'oracle':<14} ms")
    for e in entries:
        t0 = time.perf_counter()
        c = classify(e.word, ClassifierConfig())
        ms = (time.perf_counter() - t0) * 1000
        try:
            ref = exhaustive_reducibility_oracle(e.word)
        except BudgetExceeded:
            ref = "-"
        got = c.verdict.value
        tally["agree" if ref in ("-", got) else "disagree"] += 1
        if e.expected and e.expected != got:
            tally["unexpected"] += 1
        tally[got] += 1
        print(f"{str(e.word):<32} {e.expected or '-':<14} {got:<14} {ref:<14} {ms:.1f}")
    return tally


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=DeskConfig.seed)
    ap.add_argument("--count", type=int, default=DeskConfig.count)
    ap.add_argument("--max-len", type=int, default=DeskConfig.max_len)
    a = ap.parse_args()
    tally = run(DeskConfig(seed=a.seed, count=a.count, max_len=a.max_len))
    print("\n" + ", ".join(f"{k}={v}" for k, v in sorted(tally.items())))


if __name__ == "__main__":
    main()
