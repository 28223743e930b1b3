"""How often does the rigid-conjugator search recover a circle hidden by a random simple conjugation?

    python scripts/hidden_circles.py --trials 200
"""

from __future__ import annotations

import argparse
import random
from dataclasses import dataclass

from braidclass import standard_circle_orbit
from braidclass.corpus import rigid_reducible_conjugate
from braidclass.reducibility import ClassifierConfig, rigid_circle_search


@dataclass
class HiddenConfig:
    seed: int = 5
    trials: int = 100
    naive_cap: int = 0  # 0 disables the S_n sweep, so only the conjugator closure is used


def run(cfg: HiddenConfig) -> None:
    rng = random.Random(cfg.seed)
    clf = ClassifierConfig(naive_cap=cfg.naive_cap)
    for n in (3, 4):
        found = hidden = tested = 0
        for _ in range(cfg.trials):
            _, z = rigid_reducible_conjugate(rng, n, hidden=n >= 4)
            hidden += standard_circle_orbit(z) is None
            hit, cert = rigid_circle_search(z, clf)
            found += hit is not None
            tested += cert["tested"]
        print(f"B_{n}: recovered {found}/{cfg.trials}, hidden on z {hidden}, "
              f"mean conjugators tested {tested / cfg.trials:.1f}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=HiddenConfig.seed)
    ap.add_argument("--trials", type=int, default=HiddenConfig.trials)
    ap.add_argument("--naive-cap", type=int, default=HiddenConfig.naive_cap)
    a = ap.parse_args()
    run(HiddenConfig(seed=a.seed, trials=a.trials, naive_cap=a.naive_cap))


if __name__ == "__main__":
    main()
