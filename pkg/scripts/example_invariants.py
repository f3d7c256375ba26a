"""Print (H, Gamma, Sigma, Pi) and the Jordan structure of the named example states."""

import argparse
import json

from fourqubit.acceptance import EXPECTED_STAR, example_states
from fourqubit.classify import family_of
from fourqubit.invariants import invariant_vector
from fourqubit.spectral import jordan_profile


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    rows = []
    for name, psi in example_states().items():
        star = invariant_vector(psi).slocc_star
        fam = family_of(psi)
        rows.append({
            "state": name,
            "H": str(star[0]), "Gamma": str(star[1]), "Sigma": str(star[2]), "Pi": str(star[3]),
            "expected": [str(x) for x in EXPECTED_STAR[name]],
            "match": tuple(star) == tuple(EXPECTED_STAR[name]),
            "group": fam.group_str(),
            "jordan": jordan_profile(psi).describe(),
        })
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    print(f"{'state':6} {'H':>4} {'Gamma':>6} {'Sigma':>7} {'Pi':>7}  ok  group    Jordan structure")
    for r in rows:
        print(f"{r['state']:6} {r['H']:>4} {r['Gamma']:>6} {r['Sigma']:>7} {r['Pi']:>7}  "
              f"{'y' if r['match'] else 'N':>2}  {r['group']:8} {r['jordan']}")


if __name__ == "__main__":
    main()
