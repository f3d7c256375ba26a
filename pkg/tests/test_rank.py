import random

import pytest

from oracles import echelon_rank
from fourqubit.families import FamilyParams, normal_form_state
from fourqubit.rank import (first_nonzero_minor, hyperdet3, in_closure_S2, in_closure_S3,
                            qubit_ranks, rank3, rank4)
from fourqubit.states import (ALL_PERMUTATIONS, PureState3, apply_local, flattening, parse_ket,
                              permute_qubits, random_product_sum, random_sl2_local, random_state)

GHZ = parse_ket("|0000> + |1111>")
W = parse_ket("|0001> + |0010> + |0100> + |1000>")
E3 = parse_ket("|0000> + |0011> + |1111>")


def test_hyperdet3_examples():
    assert hyperdet3(parse_ket("|000>")) == 0
    assert hyperdet3(parse_ket("|000> + |111>")) == 1
    assert hyperdet3(parse_ket("|001> + |010> + |100>")) == 0


def test_rank3_examples():
    assert rank3(parse_ket("|000>")).rank == 1
    r = rank3(parse_ket("|000> + |111>"))
    assert (r.rank, r.step) == (2, 1)
    r = rank3(parse_ket("|001> + |010> + |100>"))
    assert (r.rank, r.step) == (3, 5)
    assert rank3(parse_ket("|000> + |011>")).rank == 2
    with pytest.raises(TypeError):
        rank3(GHZ)


def test_rank3_on_sums_of_products():
    rng = random.Random(1)
    for r in (1, 2, 3):
        for _ in range(200):
            phi = random_product_sum(rng, r, n=3)
            assert rank3(phi).rank <= r


def test_closure_examples():
    assert in_closure_S3(W)
    assert not in_closure_S3(normal_form_state(FamilyParams(1, (1, 2, 3, 4))))
    assert in_closure_S3(GHZ)
    assert in_closure_S2(GHZ)
    assert in_closure_S2(W)
    assert not in_closure_S2(E3)
    kind, rows, cols, value = first_nonzero_minor(E3)
    assert not value.is_zero()


def test_rank4_examples():
    r = rank4(parse_ket("|0000>"))
    assert (r.rank, r.step, r.sub.step) == (1, 4, 3)
    r = rank4(GHZ)
    assert (r.rank, r.step) == (2, 6)
    assert r.description.endswith("return 2")
    r = rank4(W)
    assert (r.rank, r.step) == (4, 5)
    assert rank4(E3).rank == 3
    assert rank4(normal_form_state(FamilyParams(1, (1, 2, 3, 4)))).rank == 4
    with pytest.raises(TypeError):
        rank4(parse_ket("|000>"))


def test_rank_report_json():
    out = rank4(parse_ket("|0000> + |0111>")).to_json()
    assert out["rank"] == 2 and out["factor_rank"]["rank"] == 2


def test_subadditivity():
    rng = random.Random(2)
    for r in range(1, 7):
        for _ in range(150):
            assert rank4(random_product_sum(rng, r)).rank <= min(r, 4)


def test_generic_rank_is_four():
    rng = random.Random(3)
    ranks = [rank4(random_product_sum(rng, 4)).rank for _ in range(300)]
    assert sum(r == 4 for r in ranks) > 0.95 * len(ranks)


def test_monotone_consistency():
    rng = random.Random(4)
    samples = [random_product_sum(rng, rng.randint(1, 4)) for _ in range(150)]
    samples += [random_state(rng, density=d) for d in (0.1, 0.2, 0.3) for _ in range(30)]
    for psi in samples:
        r = rank4(psi).rank
        ones = all(echelon_rank(flattening(psi, f"qubit{k}").to_rows()) == 1 for k in range(1, 5))
        assert (r == 1) == ones
        if r <= 2:
            assert in_closure_S2(psi)
        if r <= 3:
            assert in_closure_S3(psi)
    # the converses fail at W
    assert in_closure_S2(W) and rank4(W).rank == 4


def test_rank_invariance():
    rng = random.Random(5)
    samples = [random_product_sum(rng, rng.randint(1, 4)) for _ in range(40)]
    samples += [random_state(rng, density=0.25) for _ in range(20)]
    for psi in samples:
        r = rank4(psi).rank
        for _ in range(10):
            image = permute_qubits(apply_local(psi, random_sl2_local(rng)), rng.choice(ALL_PERMUTATIONS))
            assert rank4(image).rank == r


def test_qubit_ranks():
    assert qubit_ranks(GHZ) == (2, 2, 2, 2)
    assert qubit_ranks(parse_ket("|0000> + |0011>")) == (1, 1, 2, 2)
    assert qubit_ranks(PureState3.basis("010")) == (1, 1, 1)


@pytest.mark.parametrize("k,params,rank", [
    (1, (1, 2, -3, 0), 3),      # a+b+c = d = 0
    (1, (1, -1, 0, 0), 2),
    (1, (1, 2, 3, 4), 4),
    (2, (0, 0, 0), 1),
    (6, (0, 0), 4),
    (9, (0,), 3),
    (9, (2,), 4),
    (10, (0,), 3),
    (12, (), 3),
    (14, (), 3),
    (16, (), 2),
])
def test_rank_of_normal_forms(k, params, rank):
    assert rank4(normal_form_state(FamilyParams(k, params))).rank == rank
