"""Behaviour of the box polynomial along the volumes ``N = k*M + r``.

``M = lcm(a_1, ..., a_{d-1}, sum(a) - 1)``. At ``r = 1`` the box polynomial
scales exactly with ``k``; for other ``r`` the coefficient distribution
converges to the ``N = M + 1`` distribution with an explicit counting envelope.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from boxpoly import kernels
from boxpoly.core import (
    CoefficientDistribution,
    IntPolynomial,
    is_strictly_unimodal,
    to_distribution,
    tv_distance,
)
from boxpoly.invariants import InvariantViolation, hstar, local_hstar
from boxpoly.simplex import OneRowSimplex, row_modulus

__all__ = [
    "AsymptoticProfile",
    "ConvergenceRow",
    "ConvergenceReport",
    "modulus_M",
    "simplex_at",
    "scaling_identity_check",
    "limit_profile",
    "envelope",
    "convergence_report",
    "hstar_limit_check",
    "hstar_limit_distance",
    "age_lemma_check",
    "differing_age_count",
]


@dataclass(frozen=True)
class AsymptoticProfile:
    a: tuple[int, ...]
    M: int
    limit_box: IntPolynomial
    limit_dist: CoefficientDistribution


@dataclass(frozen=True)
class ConvergenceRow:
    k: int
    N: int
    tv: Fraction | None  # None marks a degenerate row (B identically zero)
    envelope: Fraction | None
    strictly_unimodal: bool

    @property
    def degenerate(self) -> bool:
        return self.tv is None

    @property
    def within_envelope(self) -> bool:
        if self.tv is None or self.envelope is None:
            return True
        return self.tv <= self.envelope


@dataclass(frozen=True)
class ConvergenceReport:
    profile: AsymptoticProfile
    r: int
    rows: tuple[ConvergenceRow, ...]
    # Empirical only: smallest k from which every row up to k_max was strictly unimodal.
    empirical_threshold: int | None

    @property
    def all_within_envelope(self) -> bool:
        return all(row.within_envelope for row in self.rows)


def modulus_M(a: Sequence[int]) -> int:
    return row_modulus(a)


def simplex_at(a: Sequence[int], N: int) -> OneRowSimplex:
    """Simplex with row ``(a, N)``, entries reduced mod ``N`` (a unimodular shear)."""
    return OneRowSimplex.reduced(a, N)


def scaling_identity_check(a: Sequence[int], k: int) -> bool:
    """``B(S_{kM+1}) == k * B(S_{M+1})``, both sides by enumeration."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    M = modulus_M(a)
    base = local_hstar(simplex_at(a, M + 1))
    scaled = local_hstar(simplex_at(a, k * M + 1))
    return scaled == base * k


def limit_profile(a: Sequence[int]) -> AsymptoticProfile:
    a = tuple(int(x) for x in a)
    M = modulus_M(a)
    box = local_hstar(simplex_at(a, M + 1))
    return AsymptoticProfile(a, M, box, to_distribution(box))


def envelope(a: Sequence[int], M: int, r: int, k: int) -> Fraction | None:
    """Counting bound ``(M^2 + r + sum(a)) / (kM + r - 1)``; ``None`` when the denominator vanishes."""
    den = k * M + r - 1
    if den <= 0:
        return None
    return Fraction(M * M + r + sum(a), den)


def _check_r(M: int, r: int) -> None:
    if not 0 <= r <= M - 1:
        raise ValueError(f"r={r} outside [0, {M - 1}]")


def _convergence_row(args) -> ConvergenceRow:
    a, M, r, k, limit_dist = args
    N = k * M + r
    box = local_hstar(simplex_at(a, N))
    tv = None if box.is_zero() else tv_distance(to_distribution(box), limit_dist)
    return ConvergenceRow(k, N, tv, envelope(a, M, r, k), is_strictly_unimodal(box))


def convergence_report(
    a: Sequence[int], r: int, k_max: int, mapper: Callable = map
) -> ConvergenceReport:
    """Distances to the limit for ``k = 1..k_max``.

    ``mapper`` must preserve input order; pass an ordered parallel map to
    spread the independent ``k`` values over workers.
    """
    profile = limit_profile(a)
    M = profile.M
    _check_r(M, r)
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    tasks = [(profile.a, M, r, k, profile.limit_dist) for k in range(1, k_max + 1)]
    rows = list(mapper(_convergence_row, tasks))
    threshold = None
    if is_strictly_unimodal(profile.limit_box):
        for row in reversed(rows):
            if row.degenerate or not row.strictly_unimodal:
                break
            threshold = row.k
    return ConvergenceReport(profile, r, tuple(rows), threshold)


def _hstar_at(a: Sequence[int], r: int, k: int) -> tuple[AsymptoticProfile, IntPolynomial, IntPolynomial]:
    profile = limit_profile(a)
    M = profile.M
    if math.gcd(M, r) != 1:
        raise ValueError(f"need gcd(M, r) = 1, got gcd({M}, {r}) = {math.gcd(M, r)}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    s = simplex_at(profile.a, k * M + r)
    return profile, hstar(s), local_hstar(s)


def hstar_limit_check(a: Sequence[int], r: int, k: int) -> bool:
    """``h*(S_{kM+r}) == 1 + B(S_{kM+r})``, which holds since ``gcd(M, kM+r) = 1``."""
    _, h, box = _hstar_at(a, r, k)
    return h == box + IntPolynomial([1])


def hstar_limit_distance(a: Sequence[int], r: int, k: int) -> Fraction:
    """Total variation distance between the h* distribution of ``S_{kM+r}`` and the limit."""
    profile, h, _ = _hstar_at(a, r, k)
    return tv_distance(to_distribution(h), profile.limit_dist)


def _ages(a: Sequence[int], N: int) -> list[int]:
    s = simplex_at(a, N)
    return kernels.age_table(s.steps, s.N, 0, s.N)[0]


def age_lemma_check(a: Sequence[int], k: int) -> bool:
    """At ``N = kM + 1``, elements ``kq + delta + 1`` share the age of ``kq + 1`` for ``delta < k``."""
    M = modulus_M(a)
    N = k * M + 1
    age = _ages(a, N)
    for q in range(M):
        ref = age[(k * q + 1) % N]
        for delta in range(1, k):
            if age[(k * q + delta + 1) % N] != ref:
                return False
    return True


def differing_age_count(a: Sequence[int], k: int, r: int) -> int:
    """Number of ``ell`` in ``[1, max(N, N') - 1]`` whose age at ``N = kM + r`` differs from ``N' = kM + 1``.

    Indices present for only one of the two volumes count as differing.
    """
    M = modulus_M(a)
    n_ref, n_r = k * M + 1, k * M + r
    ref, other = _ages(a, n_ref), _ages(a, n_r)
    count = 0
    for ell in range(1, max(n_ref, n_r)):
        if ell >= n_ref or ell >= n_r or ref[ell] != other[ell]:
            count += 1
    if r == 1 and count:
        raise InvariantViolation("identical volumes produced different ages")
    return count
