"""
Random desk-scale corpora: plain random words, conjugates of braids of known
type, and rigid t-conjugates of circle-preserving rigid braids.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Optional

from .braid_core import BraidWord, all_permutation_braids
from .conjugacy import is_rigid
from .normal_form import WeightedForm, conjugate_by_simple, normalize
from .reducibility import circle_word, standard_circle_orbit


@dataclass(frozen=True)
class CorpusEntry:
    word: BraidWord
    expected: Optional[str] = None
    family: str = "random"

    def line(self) -> str:
        text = str(self.word)
        tags = [f"expected={self.expected}"] if self.expected else []
        tags.append(f"family={self.family}")
        return f"{text}  # " + " ".join(tags)


def random_word(rng: random.Random, n: int, length: int) -> BraidWord:
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)))


def random_conjugate(rng: random.Random, w: BraidWord, max_len: int = 8) -> BraidWord:
    u = random_word(rng, w.n, rng.randint(0, max_len))
    return u.inverse() * w * u


# (word, verdict) seeds whose type is known by hand
KNOWN = (
    ("3: 1 2", "periodic"),
    ("3: 1 1 2", "periodic"),
    ("4: 1 2 3", "periodic"),
    ("3: 1 1", "reducible"),
    ("4: 1 3", "reducible"),
    ("4: 1 2 1 1 2 1 3", "reducible"),
    ("3: 1 -2", "pseudo_anosov"),
    ("4: 1 2 -3", "pseudo_anosov"),
)


def known_conjugates(rng: random.Random, count: int) -> Iterator[CorpusEntry]:
    seeds = [(BraidWord.parse(s), v) for s, v in KNOWN]
    for _ in range(count):
        w, v = rng.choice(seeds)
        yield CorpusEntry(random_conjugate(rng, w), v, "conjugate")


def rigid_circle_braid(rng: random.Random, n: int, max_tries: int = 10_000) -> WeightedForm:
    """A rigid braid in normal form carrying a standard circle orbit, built by cabling."""
    for _ in range(max_tries):
        w = rng.randint(2, n - 1)
        lo = rng.randint(1, n - w + 1)
        tube = (lo, lo + w - 1)
        n_ext = n - w + 1
        ext = [rng.choice((1, -1)) * rng.randint(1, n_ext - 1) for _ in range(rng.randint(2, 6))]
        inner = [rng.choice((1, -1)) * rng.randint(1, w - 1) for _ in range(rng.randint(0, 3))]
        x = normalize(circle_word(n, [tube], ext, [inner]))
        if x.factors and is_rigid(x) and standard_circle_orbit(x) is not None:
            return x
    raise RuntimeError("no rigid circle-preserving braid found")


def rigid_reducible_conjugate(rng: random.Random, n: int, hidden: bool = True,
                              max_tries: int = 10_000) -> tuple[WeightedForm, WeightedForm]:
    """
    (x, t^-1 x t) with x rigid and circle-preserving, t simple and nontrivial,
    the conjugate rigid. With ``hidden`` the conjugate itself carries no
    standard circle orbit, so recovering one needs a conjugator search.
    """
    simples = [p for p in all_permutation_braids(n) if not p.is_identity()]
    for _ in range(max_tries):
        x = rigid_circle_braid(rng, n)
        for t in rng.sample(simples, len(simples)):
            z = conjugate_by_simple(x, t)
            if z.factors and is_rigid(z) and not (hidden and standard_circle_orbit(z) is not None):
                return x, z
    raise RuntimeError("no rigid conjugate found")


def generate(seed: int, count: int, n_values=(3, 4), max_len: int = 10) -> list[CorpusEntry]:
    """A mixed labelled corpus: a third each of random words, known conjugates and rigid reducibles."""
    rng = random.Random(seed)
    out: list[CorpusEntry] = []
    third = count // 3
    for _ in range(third):
        n = rng.choice(n_values)
        out.append(CorpusEntry(random_word(rng, n, rng.randint(0, max_len))))
    out.extend(known_conjugates(rng, third))
    while len(out) < count:
        n = rng.choice([m for m in n_values if m >= 3])
        _, z = rigid_reducible_conjugate(rng, n, hidden=n >= 4)
        out.append(CorpusEntry(z.word(), "reducible", "rigid-conjugate"))
    return out
