"""Jordan structure of R~ for every family at random generic parameters."""

import argparse
import random
from dataclasses import dataclass

from fourqubit.acceptance import _generic_params, expected_profile
from fourqubit.families import FAMILY_PARAM_COUNT, FamilyParams, normal_form_state
from fourqubit.rank import rank4
from fourqubit.spectral import jordan_profile


@dataclass(frozen=True)
class CatalogConfig:
    draws: int = 3
    seed: int = 1


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--draws", type=int, default=CatalogConfig.draws)
    ap.add_argument("--seed", type=int, default=CatalogConfig.seed)
    a = ap.parse_args()
    cfg = CatalogConfig(a.draws, a.seed)
    rng = random.Random(cfg.seed)
    for k in range(1, 18):
        for _ in range(cfg.draws):
            params = _generic_params(rng, FAMILY_PARAM_COUNT[k])
            psi = normal_form_state(FamilyParams(k, params))
            prof = jordan_profile(psi)
            ok = prof == expected_profile(k, params)
            print(f"{k:>2} {','.join(str(p) for p in params):24} rank {rank4(psi).rank}  "
                  f"{'ok ' if ok else 'BAD'} {prof.describe()}")


if __name__ == "__main__":
    main()
