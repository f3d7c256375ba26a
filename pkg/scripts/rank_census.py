"""Distribution of tensor rank over random sums of r product states."""

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from fourqubit.rank import rank4
from fourqubit.states import random_product_sum


@dataclass(frozen=True)
class CensusConfig:
    trials: int = 500
    max_terms: int = 6
    seed: int = 0


def census(cfg: CensusConfig) -> dict[int, Counter]:
    rng = random.Random(cfg.seed)
    out = {}
    for r in range(1, cfg.max_terms + 1):
        out[r] = Counter(rank4(random_product_sum(rng, r)).rank for _ in range(cfg.trials))
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=CensusConfig.trials)
    ap.add_argument("--max-terms", type=int, default=CensusConfig.max_terms)
    ap.add_argument("--seed", type=int, default=CensusConfig.seed)
    a = ap.parse_args()
    cfg = CensusConfig(a.trials, a.max_terms, a.seed)
    print(f"{'r':>2}  " + "  ".join(f"rank {k}" for k in range(1, 5)))
    for r, counts in census(cfg).items():
        print(f"{r:>2}  " + "  ".join(f"{counts.get(k, 0):>6}" for k in range(1, 5)))


if __name__ == "__main__":
    main()
