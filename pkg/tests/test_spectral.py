import random
from collections import Counter
from fractions import Fraction

import pytest

from oracles import echelon_rank
from fourqubit.acceptance import nilpotent_multisets
from fourqubit.errors import InconsistencyError
from fourqubit.families import (FAMILY_PARAM_COUNT, FamilyParams, _sym_matrix, canonical_matrix,
                                family_rmatrix, normal_form_state, sym, symmetrized_jordan_block,
                                tall, wide)
from fourqubit.gaussian import I, ONE, ZERO
from fourqubit.matrix import ExactMatrix, char_poly
from fourqubit.poly import UniPoly
from fourqubit.spectral import (OrbitLabel, decode_nilpotent_signature, is_nilpotent, is_semisimple,
                                jordan_profile, orthogonal_orbit_label, r_matrix, r_tilde,
                                rational_orthogonal, word_rank_signature)
from fourqubit.states import (apply_local, parse_ket, random_scalar, random_sl2_local,
                              random_state)

s = UniPoly([0, 1])
GHZ = parse_ket("|0000> + |1111>")
W = parse_ket("|0001> + |0010> + |0100> + |1000>")
CHI = parse_ket("|0000> - |0011> - |0101> + |0110> + |1001> + |1010> + |1100> + |1111>")


def blocks_at(mat, lam):
    """Jordan block sizes at eigenvalue lam from ranks of (mat - lam)^k, by echelon rank."""
    n = mat.rows
    shifted = mat - ExactMatrix.identity(n).scale(lam)
    ranks = [n]
    power = ExactMatrix.identity(n)
    while True:
        power = power @ shifted
        ranks.append(echelon_rank(power.to_rows()))
        if ranks[-1] == ranks[-2]:
            break
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))] + [0]
    out = []
    for k in range(1, len(at_least)):
        out += [k] * (at_least[k - 1] - at_least[k])
    return tuple(sorted(out, reverse=True))


def test_r_matrix_examples():
    psi = normal_form_state(FamilyParams(1, (1, 2, 3, 4)))
    assert r_matrix(psi) == ExactMatrix.diag([1, 2, 3, 4])
    assert r_matrix(normal_form_state(FamilyParams(16))) == family_rmatrix(FamilyParams(16))


def test_r_tilde_shape():
    rng = random.Random(1)
    for _ in range(50):
        psi = random_state(rng)
        rt = r_tilde(psi).matrix
        assert rt.shape == (8, 8)
        assert rt.T == -rt
        cp = char_poly(rt)
        assert all(cp.coeff(k).is_zero() for k in range(1, 9, 2))


def test_nilpotent_examples():
    assert is_nilpotent(W)
    assert not is_nilpotent(GHZ)
    assert is_nilpotent(parse_ket("|0000>"))
    assert (r_tilde(W).matrix ** 8).is_zero()


def test_semisimple_examples():
    assert is_semisimple(normal_form_state(FamilyParams(1, (1, 2, 3, 4))))
    assert not is_semisimple(W)
    assert is_semisimple(CHI)
    assert is_semisimple(GHZ)


def test_never_both_nilpotent_and_semisimple():
    rng = random.Random(2)
    states = [random_state(rng, density=rng.choice([0.2, 0.4, 1.0])) for _ in range(300)]
    for k, n in FAMILY_PARAM_COUNT.items():
        for _ in range(3):
            try:
                states.append(normal_form_state(FamilyParams(k, [random_scalar(rng) for _ in range(n)])))
            except ValueError:
                pass
    for psi in states:
        assert not (is_nilpotent(psi) and is_semisimple(psi))


def test_profile_family1():
    prof = jordan_profile(normal_form_state(FamilyParams(1, (1, 2, 3, 4))))
    assert prof.zero_blocks == ()
    assert [f.factor for f in prof.nonzero_part] == [s + 1, s + 4, s + 9, s + 16]
    assert all(f.multiplicity == 1 and f.per_root_blocks == (1,) for f in prof.nonzero_part)


def test_profile_W():
    assert jordan_profile(W).zero_blocks == (3, 3, 1, 1)
    assert jordan_profile(W).nonzero_part == ()


def test_profile_family9():
    a = 2 * ONE
    psi = normal_form_state(FamilyParams(9, (a,)))
    prof = jordan_profile(psi)
    assert prof.zero_blocks == ()
    (f,) = prof.nonzero_part
    assert f.factor == s + 4 and f.per_root_blocks == (4,)
    rt = r_tilde(psi).matrix
    assert blocks_at(rt, 2 * I) == blocks_at(rt, -2 * I) == (4,)


def test_profile_with_unsplit_factors():
    rng = random.Random(6)
    found = 0
    for _ in range(40):
        prof = jordan_profile(random_state(rng))
        wide_factors = [f for f in prof.nonzero_part if f.factor.degree > 1]
        if wide_factors:
            found += 1
            assert prof.dimension == 8
            assert all(f.kernel_dims[0] == 2 * f.factor.degree for f in wide_factors)
    assert found


@pytest.mark.parametrize("k", sorted(FAMILY_PARAM_COUNT))
def test_profile_against_direct_eigenvalue_ranks(k):
    """Per-root blocks agree with ranks of (R~ - lam)^j at lam = +-i p."""
    rng = random.Random(10 + k)
    for _ in range(3):
        params = [random_scalar(rng, 3, 2) for _ in range(FAMILY_PARAM_COUNT[k])]
        try:
            psi = normal_form_state(FamilyParams(k, params))
        except ValueError:
            continue
        rt = r_tilde(psi).matrix
        prof = jordan_profile(psi)
        assert prof.dimension == 8
        assert prof.zero_blocks == blocks_at(rt, ZERO)
        for f in prof.nonzero_part:
            if f.factor.degree == 1:
                root = -f.factor.coeff(0)          # s = -p^2
                for p in params:
                    if -p * p == root:
                        assert blocks_at(rt, I * p) == f.per_root_blocks
                        assert blocks_at(rt, -I * p) == f.per_root_blocks


def test_profile_invariant_under_sl_locals():
    rng = random.Random(3)
    for _ in range(50):
        psi = random_state(rng, density=rng.choice([0.3, 1.0]))
        prof = jordan_profile(psi)
        for _ in range(20):
            assert jordan_profile(apply_local(psi, random_sl2_local(rng))) == prof


def test_profile_dimension_on_random_states():
    rng = random.Random(4)
    for _ in range(300):
        psi = random_state(rng, density=rng.choice([0.15, 0.3, 0.6, 1.0]))
        assert jordan_profile(psi).dimension == 8


# --- orthogonal matrices and orbit labels ----------------------------------------

def test_rational_orthogonal():
    for n in range(1, 9):
        for seed in range(100):
            x = rational_orthogonal(n, seed)
            assert x.T @ x == ExactMatrix.identity(n)
            assert x.det() in (ONE, -ONE)
    assert rational_orthogonal(1, 5) in (ExactMatrix.from_rows([[1]]), ExactMatrix.from_rows([[-1]]))
    assert rational_orthogonal(4, 9) == rational_orthogonal(4, 9)
    with pytest.raises(ValueError):
        rational_orthogonal(0, 1)


def test_orbit_label_examples():
    j3 = _sym_matrix(3, 2 * ONE)
    assert orthogonal_orbit_label(j3).blocks == (sym(3, 2),)
    label = orthogonal_orbit_label(_sym_matrix(3, ZERO))
    assert label == OrbitLabel(3, 3, (tall(1), wide(1)))
    assert str(label) == "{tall(1), wide(1)}"


def test_orbit_label_sign_of_alpha_is_canonical():
    a = symmetrized_jordan_block(sym(2, -3))
    assert orthogonal_orbit_label(a).blocks == (sym(2, 3),)


def test_orbit_label_irrational_alpha():
    # alpha^2 = 2 has no square root in Q(i)
    a = ExactMatrix.from_rows([[1, 1], [1, -1]])     # A^T A = 2 I
    (b1, b2) = orthogonal_orbit_label(a).blocks
    assert b1.alpha is None and b1.alpha_sq_poly == s - 2 and b1 == b2


def test_orbit_label_round_trip():
    rng = random.Random(5)
    for _ in range(60):
        blocks = []
        rows = cols = 0
        for _ in range(rng.randint(1, 4)):
            b = rng.choice([sym(rng.randint(1, 3), rng.randint(1, 3)), sym(2, 0), sym(4, 0),
                            tall(rng.randint(0, 2)), wide(rng.randint(0, 2))])
            if rows + b.shape[0] <= 6 and cols + b.shape[1] <= 6:
                blocks.append(b)
                rows, cols = rows + b.shape[0], cols + b.shape[1]
        if not (rows and cols):
            continue
        a = canonical_matrix(blocks)
        p, q = rational_orthogonal(a.rows, rng), rational_orthogonal(a.cols, rng)
        assert orthogonal_orbit_label(p @ a @ q) == OrbitLabel(a.rows, a.cols, tuple(blocks))


def test_nilpotent_signatures_injective_and_decodable():
    seen = {}
    for blocks in nilpotent_multisets(6):
        a = canonical_matrix(blocks)
        sig = word_rank_signature(a, 13)
        key = (a.rows, a.cols, sig)
        assert key not in seen, (blocks, seen.get(key))
        seen[key] = blocks
        assert Counter(decode_nilpotent_signature(*sig)) == Counter(blocks)


def test_single_word_family_is_not_enough():
    # {tall(1), wide(0)} and {sym(2, 0)} agree on the A-first word ranks
    x = canonical_matrix([tall(1), wide(0)])
    y = canonical_matrix([sym(2, 0)])
    assert x.shape == y.shape == (2, 2)
    sx, sy = word_rank_signature(x), word_rank_signature(y)
    assert sx[0] == sy[0] and sx[1] != sy[1]


def test_decoder_rejects_impossible_signatures():
    with pytest.raises(InconsistencyError):
        decode_nilpotent_signature([2, 1, 2], [2, 1, 0])
