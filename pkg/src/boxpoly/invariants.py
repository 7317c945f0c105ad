"""h*- and local h*-polynomials, Stapledon decompositions and IDP witnesses."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterator

from boxpoly import kernels
from boxpoly.core import IntPolynomial, is_palindromic
from boxpoly.simplex import (
    DegenerateRowError,
    OneRowSimplex,
    ages,
    row_modulus,
)

__all__ = [
    "InvariantViolation",
    "CapExceeded",
    "HypothesisUnmet",
    "StapledonDecomposition",
    "IdpWitness",
    "DEFAULT_CAP",
    "local_hstar",
    "hstar",
    "gcd_criterion",
    "height_points",
    "smallest_interior_dilate",
    "interior_hstar",
    "boundary_hstar",
    "stapledon_decompose",
    "check_zb_bounded_by_B",
    "is_shifted_symmetric",
    "find_non_idp_witness",
    "idp_certificate",
    "is_decomposable",
]

DEFAULT_CAP = 200_000


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""


class CapExceeded(RuntimeError):
    def __init__(self, estimate: int, cap: int):
        super().__init__(f"estimated {estimate} lattice points exceeds cap {cap}")
        self.estimate = estimate
        self.cap = cap


class HypothesisUnmet(ValueError):
    pass


@dataclass(frozen=True)
class StapledonDecomposition:
    ell_min: int
    a_poly: IntPolynomial
    b_poly: IntPolynomial


@dataclass(frozen=True)
class IdpWitness:
    point: tuple[int, ...]
    height: int
    decomposable: bool


@lru_cache(maxsize=512)
def _histograms(s: OneRowSimplex) -> tuple[tuple[int, ...], tuple[int, ...], int]:
    all_h, box_h, best = kernels.age_counts(s.steps, s.N, 0, s.N)
    return tuple(all_h), tuple(box_h), best


def local_hstar(s: OneRowSimplex) -> IntPolynomial:
    """Box polynomial, stored with ``d + 1`` entries."""
    return IntPolynomial(_histograms(s)[1])


def hstar(s: OneRowSimplex) -> IntPolynomial:
    return IntPolynomial(_histograms(s)[0])


def gcd_criterion(s: OneRowSimplex) -> bool:
    """``gcd(M, N) == 1``, the condition for ``h* = 1 + B``."""
    try:
        M = row_modulus(s.a)
    except DegenerateRowError as exc:
        raise DegenerateRowError(
            f"M undefined; B is identically 0 coordinate-degenerate ({exc})"
        ) from None
    return math.gcd(M, s.N) == 1


def smallest_interior_dilate(s: OneRowSimplex) -> int:
    """Smallest ``t`` with an interior lattice point in ``t*S``: min of age + #zero residues."""
    return _histograms(s)[2]


def interior_hstar(s: OneRowSimplex) -> IntPolynomial:
    """Reciprocity: the interior coefficient of ``z^i`` is ``h*_{d+1-i}``."""
    h = hstar(s)
    d = s.d
    return IntPolynomial([0] + [h[d + 1 - i] for i in range(1, d + 2)])


def boundary_hstar(s: OneRowSimplex) -> IntPolynomial:
    h = hstar(s)
    inner = interior_hstar(s)
    d = s.d
    diff = [h[i] - inner[i] for i in range(d + 2)]
    quotient = []
    acc = 0
    for c in diff:
        acc += c
        quotient.append(acc)
    if quotient[-1] != 0:
        raise InvariantViolation(f"h* - h*_interior not divisible by 1 - z for {s}")
    if any(c < 0 for c in quotient):
        raise InvariantViolation(f"negative boundary h* coefficient for {s}")
    return IntPolynomial(quotient[:-1])


def stapledon_decompose(s: OneRowSimplex) -> StapledonDecomposition:
    d = s.d
    ell = smallest_interior_dilate(s)
    h = hstar(s)
    a_poly = boundary_hstar(s)
    lhs = IntPolynomial([1] * ell) * h
    n = max(len(lhs), len(a_poly), ell) + 1
    diff = [lhs[i] - a_poly[i] for i in range(n)]
    if any(diff[:ell]):
        raise InvariantViolation(f"low-degree residue in Stapledon split for {s}")
    tail = diff[ell:]
    if any(c < 0 for c in tail):
        raise InvariantViolation(f"negative b-coefficient for {s}")
    b_poly = IntPolynomial(tail).padded(max(d - ell + 1, 1))
    a_poly = a_poly.padded(d + 1)
    if not is_palindromic(a_poly, 0, d):
        raise InvariantViolation(f"a-polynomial not palindromic on [0, {d}] for {s}")
    if d - ell >= 0:
        if not is_palindromic(b_poly, 0, d - ell):
            raise InvariantViolation(f"b-polynomial not palindromic on [0, {d - ell}] for {s}")
    elif not b_poly.is_zero():
        raise InvariantViolation(f"nonzero b-polynomial with ell = d + 1 for {s}")
    return StapledonDecomposition(ell, a_poly, b_poly)


def check_zb_bounded_by_B(s: OneRowSimplex) -> bool:
    dec = stapledon_decompose(s)
    if dec.ell_min != 1:
        raise HypothesisUnmet(
            f"proposition hypothesis unmet: smallest interior dilate is {dec.ell_min}, not 1"
        )
    box = local_hstar(s)
    zb = dec.b_poly.shift(1)
    return all(zb[i] <= box[i] for i in range(max(len(zb), len(box))))


def is_shifted_symmetric(p: IntPolynomial, d: int) -> bool:
    return all(p[i] == p[d + 1 - i] for i in range(1, d + 1))


# -- lattice points of the cone ---------------------------------------------


def _parallelepiped_point(s: OneRowSimplex, residues, age: int) -> tuple[int, ...]:
    N = s.N
    rd = residues[-1]
    xs = tuple((rj + rd * aj) // N for rj, aj in zip(residues[1:-1], s.a))
    return (age, *xs, rd)


def _residues(s: OneRowSimplex, ell: int) -> tuple[int, ...]:
    return tuple((ell * st) % s.N for st in s.steps)


def _low_age_elements(s: OneRowSimplex, h: int) -> list[tuple[int, int]]:
    age_list, _ = ages(s)
    return [(ell, t) for ell, t in enumerate(age_list) if t <= h]


def height_points(s: OneRowSimplex, h: int, cap: int = DEFAULT_CAP) -> list[tuple[int, ...]]:
    """All lattice points ``(h, x)`` of the cone over ``{1} x S`` at height ``h``.

    Each is a parallelepiped point of age ``t <= h`` plus a nonnegative
    combination of ``h - t`` lifted vertices.
    """
    if h < 1:
        raise ValueError(f"height must be >= 1, got {h}")
    d = s.d
    low = _low_age_elements(s, h)
    estimate = sum(math.comb(h - t + d, d) for _, t in low)
    if estimate > cap:
        raise CapExceeded(estimate, cap)
    rows = s.extended_matrix()
    out = []
    for ell, t in low:
        base = _parallelepiped_point(s, _residues(s, ell), t)
        for combo in combinations_with_replacement(range(d + 1), h - t):
            p = list(base)
            for i in combo:
                row = rows[i]
                for j in range(d + 1):
                    p[j] += row[j]
            out.append(tuple(p))
    return out


class _Decomposer:
    def __init__(self, s: OneRowSimplex, cap: int):
        self.s = s
        self.level1 = height_points(s, 1, cap)
        self.level1_set = frozenset(self.level1)
        self.memo: dict[tuple[int, ...], bool] = {}

    def __call__(self, p: tuple[int, ...]) -> bool:
        h = p[0]
        if h == 1:
            return p in self.level1_set
        if h == 2:
            return any(tuple(a - b for a, b in zip(p, x)) in self.level1_set for x in self.level1)
        hit = self.memo.get(p)
        if hit is not None:
            return hit
        result = False
        for x in self.level1:
            rest = tuple(a - b for a, b in zip(p, x))
            if self.s.in_cone(rest) and self(rest):
                result = True
                break
        self.memo[p] = result
        return result


def is_decomposable(s: OneRowSimplex, point: tuple[int, ...], cap: int = DEFAULT_CAP) -> bool:
    """Whether the cone point ``(h, x)`` is a sum of ``h`` height-one lattice points."""
    return _Decomposer(s, cap)(tuple(point))


def find_non_idp_witness(
    s: OneRowSimplex, h: int = 2, cap: int = DEFAULT_CAP
) -> IdpWitness | None:
    """First height-``h`` lattice point that is not a sum of ``h`` height-one points."""
    if h < 2:
        raise ValueError(f"witness height must be >= 2, got {h}")
    decomp = _Decomposer(s, cap)
    for p in height_points(s, h, cap):
        if not decomp(p):
            return IdpWitness(p[1:], h, False)
    return None


def idp_certificate(s: OneRowSimplex, cap: int = DEFAULT_CAP) -> IdpWitness | None:
    """Exhaustive IDP check; returns a witness, or ``None`` when ``S`` has the IDP.

    A cone point splits as parallelepiped point plus lifted vertices, so it is
    enough to decompose every parallelepiped point of age at least two.
    """
    decomp = _Decomposer(s, cap)
    age_list, _ = ages(s)
    for ell, t in enumerate(age_list):
        if t < 2:
            continue
        p = _parallelepiped_point(s, _residues(s, ell), t)
        if not decomp(p):
            return IdpWitness(p[1:], t, False)
    return None


def iter_parallelepiped(s: OneRowSimplex) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Yield ``(ell, (age, x))`` for every parallelepiped lattice point."""
    age_list, _ = ages(s)
    for ell, t in enumerate(age_list):
        yield ell, _parallelepiped_point(s, _residues(s, ell), t)
