from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from boxpoly.core import (
    CoefficientDistribution,
    EmptyDistributionError,
    IntPolynomial,
    floor_identity_rescale,
    floor_identity_gap,
    floor_identity_offset,
    floor_identity_numerator,
    is_constant_on,
    is_palindromic,
    is_strictly_unimodal,
    is_unimodal,
    to_distribution,
    tv_distance,
)

coeff_lists = st.lists(st.integers(min_value=0, max_value=50), max_size=12)


def test_polynomial_basics():
    p = IntPolynomial([0, 0, 1, 1, 1, 0])
    assert p.degree == 4
    assert p(1) == 3
    assert p == IntPolynomial([0, 0, 1, 1, 1])
    assert hash(p) == hash(IntPolynomial([0, 0, 1, 1, 1]))
    assert p[10] == 0
    assert str(p) == "z^2 + z^3 + z^4"
    assert str(IntPolynomial()) == "0"
    assert IntPolynomial().degree == -1
    assert IntPolynomial.monomial(3, 2) == IntPolynomial([0, 0, 0, 2])


def test_negative_coefficient_rejected():
    with pytest.raises(ValueError, match="degree 1"):
        IntPolynomial([1, -1])


def test_padded():
    p = IntPolynomial([1, 2])
    assert p.padded(4).coeffs == (1, 2, 0, 0)
    with pytest.raises(ValueError):
        p.padded(1)


@given(coeff_lists, coeff_lists)
def test_multiplication_evaluates(a, b):
    p, q = IntPolynomial(a), IntPolynomial(b)
    for z in (0, 1, 2, 3):
        assert (p * q)(z) == p(z) * q(z)
        assert (p + q)(z) == p(z) + q(z)
    assert (p * 3)(2) == 3 * p(2)
    assert p.shift(2)(2) == 4 * p(2)


@pytest.mark.parametrize(
    "coeffs, uni, strict",
    [
        ([0, 0, 1, 1, 1, 0], True, False),
        ([0, 0, 4, 6, 8, 11, 10, 11, 8, 6, 4, 0], False, False),
        ([1, 2, 2, 1], True, True),
        ([1, 3, 2], True, True),
        ([1, 2, 1, 2], False, False),
        ([0, 1, 0, 1], False, False),
        ([], True, True),
        ([0, 0, 0], True, True),
        ([5], True, True),
    ],
)
def test_unimodality_cases(coeffs, uni, strict):
    assert is_unimodal(coeffs) is uni
    assert is_strictly_unimodal(coeffs) is strict


def _unimodal_brute(c):
    n = len(c)
    return any(
        all(c[i] <= c[i + 1] for i in range(p)) and all(c[i] >= c[i + 1] for i in range(p, n - 1))
        for p in range(max(n, 1))
    )


@given(coeff_lists)
def test_unimodal_matches_peak_search(c):
    assert is_unimodal(c) == _unimodal_brute(c)


@given(coeff_lists)
def test_strict_implies_weak_on_support(c):
    nz = [i for i, x in enumerate(c) if x]
    if nz and is_strictly_unimodal(c):
        assert is_unimodal(c[nz[0] : nz[-1] + 1])


def test_palindromic_and_constant():
    p = IntPolynomial([0, 0, 1, 2, 1, 0])
    assert is_palindromic(p, 1, 5)
    assert not is_palindromic(p, 0, 5)
    assert is_constant_on([0, 0, 3, 3, 3, 0], 2, 4)
    assert not is_constant_on([0, 1, 3, 3, 3, 0], 2, 4)
    assert not is_constant_on([0, 0, 3, 2, 3], 2, 4)
    with pytest.raises(ValueError):
        is_palindromic(p, 3, 1)


def test_distribution_and_tv():
    d1 = to_distribution(IntPolynomial([0, 0, 1, 1, 1]))
    assert d1.probs[2] == Fraction(1, 3)
    d2 = to_distribution(IntPolynomial([0, 0, 2, 2, 2, 0]))
    assert tv_distance(d1, d2) == 0
    d3 = to_distribution(IntPolynomial([1]))
    assert tv_distance(d1, d3) == 1
    with pytest.raises(EmptyDistributionError, match="empty distribution"):
        to_distribution(IntPolynomial([0, 0]))
    with pytest.raises(ValueError):
        CoefficientDistribution((Fraction(1, 2),))


@given(st.lists(st.integers(0, 20), min_size=1, max_size=8), st.lists(st.integers(0, 20), min_size=1, max_size=8))
def test_tv_is_a_metric_value(a, b):
    if sum(a) == 0 or sum(b) == 0:
        return
    da, db = to_distribution(a), to_distribution(b)
    t = tv_distance(da, db)
    assert 0 <= t <= 1
    assert t == tv_distance(db, da)
    assert sum(da.probs) == 1


def test_floor_identity_small_grid():
    for k in range(1, 6):
        for m in range(1, 6):
            for n in range(1, 6):
                for i in range(m * n):
                    assert floor_identity_rescale(k, m, n, i)
                    for delta in range(k):
                        assert floor_identity_offset(k, m, n, i, delta)


@given(st.integers(1, 40), st.integers(1, 10), st.integers(1, 10), st.data())
def test_floor_identities_random(k, m, n, data):
    mn = m * n
    i = data.draw(st.integers(0, mn - 1))
    delta = data.draw(st.integers(0, k - 1))
    assert floor_identity_offset(k, m, n, i, delta)
    if delta >= (n - 1) * m + 1 and k >= n:
        assert floor_identity_gap(k, m, n, i, delta)
    if k >= mn and delta >= mn:
        r = data.draw(st.integers(1, mn))
        assert floor_identity_numerator(k, m, n, r, i, delta)


@pytest.mark.parametrize(
    "call",
    [
        lambda: floor_identity_offset(3, 2, 2, 4, 0),
        lambda: floor_identity_offset(3, 2, 2, 0, 3),
        lambda: floor_identity_rescale(3, 2, 2, 4),
        lambda: floor_identity_gap(3, 2, 2, 0, 1),
        lambda: floor_identity_numerator(3, 2, 2, 1, 0, 2),
        lambda: floor_identity_numerator(8, 2, 2, 0, 0, 4),
        lambda: floor_identity_offset(0, 1, 1, 0, 0),
    ],
)
def test_floor_identity_preconditions(call):
    with pytest.raises(ValueError):
        call()
