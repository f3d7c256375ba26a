"""Orders of the matrix groups generated by subsets of the Weyl generators.

The coordinate swaps and paired sign flips give the D4 Weyl group (192).
Adding the half-sum reflection doubles it to 384; the single sign change
negate3 is needed to reach the full F4 Weyl group of order 1152. Both extra
generators are the actions of qubit transpositions on diagonal R-matrices.
"""

from fourqubit.families import FamilyParams, normal_form_state
from fourqubit.invariants import WEYL_GENERATORS, weyl_generator_matrix
from fourqubit.matrix import ExactMatrix
from fourqubit.spectral import r_matrix
from fourqubit.states import ALL_PERMUTATIONS, permute_qubits


def closure(mats):
    eye = ExactMatrix.identity(4)
    seen = {eye.entries}
    frontier = [eye]
    while frontier:
        nxt = []
        for m in frontier:
            for g in mats:
                x = g @ m
                if x.entries not in seen:
                    seen.add(x.entries)
                    nxt.append(x)
        frontier = nxt
    return seen


def permutation_matrices():
    """The 4x4 matrix by which each qubit permutation moves diag(R) in family 1."""
    out = {}
    for sigma in ALL_PERMUTATIONS:
        cols = []
        for e in range(4):
            x = [1 if i == e else 0 for i in range(4)]
            r = r_matrix(permute_qubits(normal_form_state(FamilyParams(1, x)), sigma))
            cols.append([r[i, i] for i in range(4)])
        out[str(sigma)] = ExactMatrix.from_rows(cols).T
    return out


def main():
    d4 = [weyl_generator_matrix(g) for g in WEYL_GENERATORS if g.startswith(("swap", "flip"))]
    reflect = weyl_generator_matrix("reflect")
    negate3 = weyl_generator_matrix("negate3")
    print("D4 generators:                ", len(closure(d4)))
    print("D4 + reflect:                 ", len(closure(d4 + [reflect])))
    print("D4 + reflect + negate3:       ", len(closure(d4 + [reflect, negate3])))
    perms = permutation_matrices()
    print("D4 + all qubit permutations:  ", len(closure(d4 + list(perms.values()))))
    for name, m in sorted(perms.items()):
        tag = "reflect" if m == reflect else "negate3" if m == negate3 else ""
        if tag:
            print(f"  permutation {name} acts as {tag}")


if __name__ == "__main__":
    main()
