import random

import pytest
from hypothesis import given, strategies as st

from conftest import scalars
from oracles import echelon_rank, laplace_det
from fourqubit.families import _sym_matrix, sym, symmetrized_jordan_block
from fourqubit.gaussian import I, ONE, ZERO
from fourqubit.matrix import ExactMatrix, char_poly, determinant, matrix_rank, poly_eval_matrix
from fourqubit.poly import UniPoly
from fourqubit.states import parse_ket, random_scalar
from fourqubit.spectral import r_tilde

t = UniPoly([0, 1])


def matrices(max_n=5, square=False):
    def build(n, m, data):
        return ExactMatrix(n, m, data[: n * m])
    dims = st.integers(1, max_n)
    return dims.flatmap(lambda n: (st.just(n) if square else dims).flatmap(
        lambda m: st.lists(st.one_of(st.just(ZERO), scalars), min_size=n * m, max_size=n * m)
        .map(lambda data: build(n, m, data))))


def test_rank_examples():
    assert matrix_rank(ExactMatrix.zeros(4)) == 0
    assert matrix_rank(ExactMatrix.identity(4)) == 4
    assert matrix_rank(symmetrized_jordan_block(sym(2, 0))) == 1
    j3 = _sym_matrix(3, ZERO)
    assert j3 == ExactMatrix.from_rows([[0, 1 + I, 0], [1 + I, 0, 1 - I], [0, 1 - I, 0]])
    assert matrix_rank(j3) == 2


def test_rank_random_against_echelon_oracle():
    rng = random.Random(11)
    for _ in range(1000):
        n, m = rng.randint(1, 8), rng.randint(1, 8)
        k = rng.randint(1, min(n, m))
        # low-rank products make rank deficiency common
        a = ExactMatrix(n, k, [random_scalar(rng, 3, 2) for _ in range(n * k)])
        b = ExactMatrix(k, m, [random_scalar(rng, 3, 2) for _ in range(k * m)])
        x = a @ b if rng.random() < 0.6 else ExactMatrix(n, m, [random_scalar(rng, 3, 2)
                                                               for _ in range(n * m)])
        assert matrix_rank(x) == echelon_rank(x.to_rows())


@given(matrices(5, square=True))
def test_det_matches_laplace(m):
    assert determinant(m) == laplace_det(m.to_rows())


@given(matrices(4, square=True), matrices(4, square=True))
def test_det_multiplicative(a, b):
    if a.rows == b.rows:
        assert determinant(a @ b) == determinant(a) * determinant(b)


@given(matrices(5))
def test_rank_transpose(m):
    assert matrix_rank(m) == matrix_rank(m.T) == echelon_rank(m.to_rows())


def test_char_poly_examples():
    assert char_poly(ExactMatrix.diag([1, 2])) == t ** 2 - 3 * t + 2
    assert char_poly(ExactMatrix.zeros(2)) == t ** 2
    ghz = parse_ket("1|0000> + 1|1111>")
    assert char_poly(r_tilde(ghz).matrix) == t ** 4 * (t ** 2 + 1) ** 2


@given(matrices(5, square=True))
def test_char_poly_is_det_of_t_minus_a(m):
    p = char_poly(m)
    assert p.degree == m.rows and p.lc() == ONE
    for x in (ZERO, ONE, I, 2 - I):
        shifted = ExactMatrix.identity(m.rows).scale(x) - m
        assert p(x) == laplace_det(shifted.to_rows())


@given(matrices(6, square=True))
def test_cayley_hamilton(m):
    assert poly_eval_matrix(char_poly(m), m).is_zero()


def test_poly_eval_examples():
    rng = random.Random(3)
    m = ExactMatrix(3, 3, [random_scalar(rng) for _ in range(9)])
    assert poly_eval_matrix(t, m) == m
    rot = ExactMatrix.from_rows([[0, -1], [1, 0]])
    assert poly_eval_matrix(t ** 2 + 1, rot).is_zero()


def test_non_square_errors():
    m = ExactMatrix.zeros(2, 3)
    with pytest.raises(ValueError):
        char_poly(m)
    with pytest.raises(ValueError):
        poly_eval_matrix(t, m)
    with pytest.raises(ValueError):
        determinant(m)


@given(matrices(4, square=True))
def test_inverse(m):
    if determinant(m).is_zero():
        with pytest.raises(ZeroDivisionError):
            m.inverse()
    else:
        assert m @ m.inverse() == ExactMatrix.identity(m.rows)
