import itertools

import pytest
from hypothesis import assume, given, strategies as st

from boxpoly.core import IntPolynomial, is_palindromic, is_unimodal
from boxpoly.invariants import (
    CapExceeded,
    HypothesisUnmet,
    boundary_hstar,
    check_zb_bounded_by_B,
    find_non_idp_witness,
    gcd_criterion,
    height_points,
    hstar,
    idp_certificate,
    interior_hstar,
    is_decomposable,
    is_shifted_symmetric,
    iter_parallelepiped,
    local_hstar,
    smallest_interior_dilate,
    stapledon_decompose,
)
from boxpoly.simplex import DegenerateRowError, OneRowSimplex, row_modulus
from oracles import (
    barycentric,
    brute_box,
    brute_hstar,
    dilate_count,
    hstar_by_counting,
    interior_hstar_by_counting,
    smallest_interior_dilate_by_counting,
)
from reference_data import NON_UNIMODAL_MODULI, NON_UNIMODAL_ROWS
from strategies import simplices


def test_small_example():
    s = OneRowSimplex((1, 1, 1, 1), 6)
    assert local_hstar(s) == IntPolynomial([0, 0, 1, 1, 1])
    assert hstar(s) == IntPolynomial([1, 0, 2, 2, 1])
    assert len(local_hstar(s)) == s.d + 1


def test_sixteen_ones():
    s = OneRowSimplex((1,) * 16, 331)
    assert local_hstar(s) == IntPolynomial([0, 0] + [22] * 15)


@pytest.mark.parametrize("row, expected", NON_UNIMODAL_ROWS)
def test_non_unimodal_rows(row, expected):
    M = row_modulus(row)
    assert M in NON_UNIMODAL_MODULI
    box = local_hstar(OneRowSimplex(row, M + 1))
    assert list(box.coeffs) == expected
    assert not is_unimodal(box)


@given(simplices(max_d=5, max_n=40))
def test_hstar_and_box_match_parallelepiped_oracle(s):
    assert list(hstar(s).coeffs) == brute_hstar(s.a, s.N)
    assert list(local_hstar(s).coeffs) == brute_box(s.a, s.N)


@given(simplices(max_d=4, max_n=12))
def test_hstar_matches_ehrhart_counting(s):
    counted = hstar_by_counting(s.a, s.N)
    assert counted[-1] == 0
    assert list(hstar(s).coeffs) == counted[:-1]


@given(simplices())
def test_basic_invariants(s):
    h, box = hstar(s), local_hstar(s)
    assert h(1) == s.N
    assert h[0] == 1
    assert all(box[i] <= h[i] for i in range(s.d + 1))
    assert box[0] == 0
    assert is_palindromic(box, 1, s.d)


@given(simplices())
def test_gcd_criterion_gives_hstar_one_plus_box(s):
    try:
        ok = gcd_criterion(s)
    except DegenerateRowError:
        return
    if ok:
        assert hstar(s) == local_hstar(s) + IntPolynomial([1])


def test_gcd_criterion_degenerate_message():
    with pytest.raises(DegenerateRowError, match="coordinate-degenerate"):
        gcd_criterion(OneRowSimplex((0, 2), 5))


def test_interior_example():
    s = OneRowSimplex((1, 1, 1, 1), 6)
    assert interior_hstar(s) == IntPolynomial([0, 0, 1, 2, 2, 0, 1])
    assert smallest_interior_dilate(s) == 2


@given(simplices(max_d=4, max_n=15))
def test_reciprocity_against_counting(s):
    assert list(interior_hstar(s).padded(s.d + 2).coeffs) == interior_hstar_by_counting(s.a, s.N)
    assert smallest_interior_dilate(s) == smallest_interior_dilate_by_counting(s.a, s.N)


@given(simplices())
def test_boundary_plus_interior(s):
    # h* = interior + (1 - z) * boundary
    bd, inner, h = boundary_hstar(s), interior_hstar(s), hstar(s)
    for i in range(s.d + 2):
        assert h[i] == inner[i] + bd[i] - bd[i - 1] * (i > 0)


def test_stapledon_small_example():
    dec = stapledon_decompose(OneRowSimplex((1, 1), 4))
    assert dec.ell_min == 2
    assert dec.b_poly == IntPolynomial([2, 2])
    assert dec.a_poly == IntPolynomial([1, 1, 1, 1])


def _reconstructs(s, dec):
    lhs = IntPolynomial([1] * dec.ell_min) * hstar(s)
    return lhs == dec.a_poly + dec.b_poly.shift(dec.ell_min)


@given(simplices())
def test_stapledon_properties(s):
    dec = stapledon_decompose(s)
    assert _reconstructs(s, dec)
    assert is_palindromic(dec.a_poly, 0, s.d)
    if s.d - dec.ell_min >= 0:
        assert is_palindromic(dec.b_poly, 0, s.d - dec.ell_min)
    else:
        assert dec.b_poly.is_zero()


@given(simplices())
def test_zb_bounded_by_box(s):
    if smallest_interior_dilate(s) != 1:
        with pytest.raises(HypothesisUnmet):
            check_zb_bounded_by_B(s)
    else:
        assert check_zb_bounded_by_B(s)


def test_zb_bound_with_interior_point():
    s = OneRowSimplex((4, 4, 4), 5)
    assert smallest_interior_dilate(s) == 1
    assert check_zb_bounded_by_B(s)


def test_shifted_symmetric():
    assert is_shifted_symmetric(IntPolynomial([1, 2, 3, 2]), 3)
    assert not is_shifted_symmetric(IntPolynomial([1, 2, 3, 1]), 3)


@given(simplices(max_d=4, max_n=10), st.integers(1, 3))
def test_height_points_count(s, h):
    pts = height_points(s, h)
    assert len(pts) == len(set(pts)) == dilate_count(s.a, s.N, h, interior=False)
    for p in pts:
        assert p[0] == h and s.in_cone(p)
        lam = barycentric(s.a, s.N, p[0], p[1:])
        assert sum(lam) == h and min(lam) >= 0


def test_cap_exceeded():
    s = OneRowSimplex((1, 1, 1, 1), 6)
    with pytest.raises(CapExceeded) as info:
        height_points(s, 5, cap=10)
    assert info.value.cap == 10 and info.value.estimate > 10


def _brute_idp_witness(s):
    """First non-decomposable point at heights 2..d-1, by sums of height-1 points."""
    ones = set(height_points(s, 1))
    for h in range(2, s.d):
        for p in height_points(s, h):
            reachable = {(0,) * (s.d + 1)}
            for _ in range(h):
                reachable = {
                    tuple(x + y for x, y in zip(r, q)) for r in reachable for q in ones
                }
            if p not in reachable:
                return p
    return None


@given(simplices(max_d=4, max_n=9))
def test_idp_certificate_matches_brute_force(s):
    witness = idp_certificate(s)
    brute = _brute_idp_witness(s)
    assert (witness is None) == (brute is None)
    if witness is not None:
        lifted = (witness.height,) + witness.point
        assert s.in_cone(lifted) and not is_decomposable(s, lifted)


def test_unimodular_simplex_is_idp():
    assert idp_certificate(OneRowSimplex((0, 0, 0), 1)) is None
    assert find_non_idp_witness(OneRowSimplex((0, 0, 0), 1)) is None


def test_known_non_idp_witness():
    s = OneRowSimplex((2, 1), 4)
    w = find_non_idp_witness(s)
    assert w is not None and w.height == 2
    assert not is_decomposable(s, (2,) + w.point)
    with pytest.raises(ValueError):
        find_non_idp_witness(s, 1)


@given(simplices(max_d=6, max_n=60))
def test_iter_parallelepiped_heights(s):
    pts = list(iter_parallelepiped(s))
    assert len(pts) == s.N
    counts = [0] * (s.d + 1)
    for _, p in pts:
        counts[p[0]] += 1
        lam = s.barycentric(p)
        assert all(0 <= x < 1 for x in lam)
    assert counts == list(hstar(s).coeffs)


@pytest.mark.parametrize("N", range(1, 8))
def test_stapledon_exhaustive_small(N):
    for a in itertools.product(range(N), repeat=2):
        s = OneRowSimplex(a, N)
        assert _reconstructs(s, stapledon_decompose(s))


@pytest.mark.parametrize("N", range(1, 9))
def test_permutation_invariance(N):
    for a in itertools.combinations_with_replacement(range(N), 3):
        ref = stapledon_decompose(OneRowSimplex(a, N))
        ref_h = hstar(OneRowSimplex(a, N))
        for perm in set(itertools.permutations(a)):
            s = OneRowSimplex(perm, N)
            assert hstar(s) == ref_h
            assert stapledon_decompose(s) == ref
