from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import nonzero_scalars, scalars
from fourqubit.gaussian import I, ONE, ZERO, GaussianRational
from fourqubit.poly import (UniPoly, factor_quartic_in_s, gaussian_roots, gaussian_sqrt,
                            poly_gcd, squarefree_decomposition)

t = UniPoly([0, 1])


def P(*coeffs):
    return UniPoly(coeffs)


def test_basic_shape():
    assert P(1, 2, 0, 0).degree == 1
    assert UniPoly().degree == -1 and UniPoly().is_zero()
    assert (t ** 2 + 1)(I) == ZERO
    assert str(t ** 2 - 3 * t + 2) == "t^2 - 3*t + 2"


@pytest.mark.parametrize("p,q,g", [
    (t ** 2 - 1, t - 1, t - 1),
    (t ** 3, t ** 2, t ** 2),
    (t ** 4 * (t ** 2 + 1) ** 2, (t ** 4 * (t ** 2 + 1) ** 2).derivative(), t ** 3 * (t ** 2 + 1)),
])
def test_gcd_examples(p, q, g):
    assert poly_gcd(p, q) == g


def test_gcd_both_zero():
    with pytest.raises(ValueError):
        poly_gcd(UniPoly(), UniPoly())


@pytest.mark.parametrize("p,expected", [
    (t ** 2 + 1, {(t ** 2 + 1, 1)}),
    (t ** 4 * (t ** 2 + 1) ** 2, {(t, 4), (t ** 2 + 1, 2)}),
    ((t ** 2 + 2) ** 3 * (t ** 2 + 5), {(t ** 2 + 5, 1), (t ** 2 + 2, 3)}),
])
def test_squarefree_examples(p, expected):
    assert set(squarefree_decomposition(p)) == expected


def test_squarefree_sorted_by_multiplicity():
    assert squarefree_decomposition((t ** 2 + 2) ** 3 * (t ** 2 + 5)) == [
        (t ** 2 + 5, 1), (t ** 2 + 2, 3)]


def test_squarefree_zero():
    with pytest.raises(ValueError):
        squarefree_decomposition(UniPoly())


@given(st.lists(st.tuples(scalars, st.integers(1, 4)), min_size=1, max_size=4), nonzero_scalars)
def test_squarefree_reconstructs(roots, lead):
    p = UniPoly([lead])
    for r, k in roots:
        p = p * (t - r) ** k
    parts = squarefree_decomposition(p)
    prod = UniPoly([1])
    for g, j in parts:
        assert g == g.monic()
        assert poly_gcd(g, g.derivative()).degree == 0
        prod = prod * g ** j
    assert prod == p.monic()
    for i, (g, _) in enumerate(parts):
        for h, _ in parts[i + 1:]:
            assert poly_gcd(g, h).degree == 0


@pytest.mark.parametrize("x,y", [(4, 2), (2 * I, 1 + I), (2, None), (-4, 2 * I), (-1, I),
                                 (GaussianRational(Fraction(9, 4)), GaussianRational(Fraction(3, 2)))])
def test_gaussian_sqrt_examples(x, y):
    assert gaussian_sqrt(x) == y


@given(scalars)
def test_gaussian_sqrt_of_square(z):
    y = gaussian_sqrt(z * z)
    assert y is not None and y * y == z * z
    assert y.re > 0 or (y.re == 0 and y.im >= 0)
    assert y in (z, -z)


@given(scalars)
def test_gaussian_sqrt_valid_when_present(x):
    y = gaussian_sqrt(x)
    if y is not None:
        assert y * y == x


@given(st.lists(scalars, min_size=1, max_size=6, unique=True), st.booleans())
def test_gaussian_roots_recovers_planted_roots(roots, pad):
    p = UniPoly.from_roots(roots)
    if pad:
        p = p * (t ** 2 + 2)  # irreducible over Q(i), contributes no roots
    assert set(gaussian_roots(p)) == set(roots)


def test_factor_examples():
    s = t
    assert factor_quartic_in_s(s ** 2 + 3 * s + 2) == [(s + 1, 1), (s + 2, 1)]
    assert factor_quartic_in_s(s ** 2 + 2) == [(s ** 2 + 2, 1)]
    p = (s + 1) * (s + 4) * (s + 9) * (s + 16)
    assert set(factor_quartic_in_s(p)) == {(s + 1, 1), (s + 4, 1), (s + 9, 1), (s + 16, 1)}


def test_factor_rootless_quartic_into_quadratics():
    p = (t ** 2 + 2) * (t ** 2 + 3)
    assert set(factor_quartic_in_s(p)) == {(t ** 2 + 2, 1), (t ** 2 + 3, 1)}
    # t^4 + 4 = (t^2 + 2t + 2)(t^2 - 2t + 2) splits further over Q(i)
    assert len(factor_quartic_in_s(t ** 4 + 4)) == 4
    # t^4 - 2 has no factorization over Q(i)
    assert factor_quartic_in_s(t ** 4 - 2) == [(t ** 4 - 2, 1)]


def test_factor_degree_guard():
    with pytest.raises(ValueError):
        factor_quartic_in_s(t ** 5)


def _irreducible_quadratics():
    # t^2 - c with c not a square in Q(i), shifted
    return st.builds(lambda c, b: (t - b) ** 2 - c,
                     st.sampled_from([2, 3, -2, 5, 3 * I, 1 + I, 6]), scalars)


@given(st.lists(st.one_of(st.builds(lambda r: t - r, scalars), _irreducible_quadratics()),
                min_size=1, max_size=3))
def test_factor_reconstructs(parts):
    p = UniPoly([1])
    for f in parts:
        p = p * f
    if p.degree > 4:
        return
    out = factor_quartic_in_s(p)
    prod = UniPoly([1])
    for f, m in out:
        prod = prod * f ** m
        if f.degree >= 2:
            assert gaussian_roots(f) == []
    assert prod == p
