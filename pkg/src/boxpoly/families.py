"""Closed forms for the all-ones row ``(1, ..., 1, N)`` and the geometric row ``(q^{k-1}, ..., q, 1, q^k)``."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from boxpoly.core import IntPolynomial, is_constant_on, is_unimodal
from boxpoly.invariants import (
    DEFAULT_CAP,
    IdpWitness,
    InvariantViolation,
    is_decomposable,
    local_hstar,
)
from boxpoly.simplex import OneRowSimplex

__all__ = [
    "AlphaVector",
    "GeometricFamily",
    "AllOnesClass",
    "alpha_vector",
    "allones_residue_rule",
    "allones_simplex",
    "allones_classify",
    "allones_classify_brute",
    "digit_poly_f",
    "geometric_delta",
    "geometric_local_hstar_fast",
    "geometric_age_base_q",
    "geometric_age_direct",
    "geometric_non_idp_witness",
]


@dataclass(frozen=True)
class AlphaVector:
    a: int
    N: int
    entries: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.N // self.a

    @property
    def r(self) -> int:
        return self.N % self.a

    @property
    def b(self) -> int:
        return math.gcd(self.a, self.N)


class AllOnesClass(enum.Enum):
    CONSTANT = "Constant"
    UNIMODAL_NON_CONSTANT = "UnimodalNonConstant"
    NON_UNIMODAL = "NonUnimodal"

    @property
    def unimodal(self) -> bool:
        return self is not AllOnesClass.NON_UNIMODAL


@dataclass(frozen=True)
class GeometricFamily:
    q: int
    k: int

    def __post_init__(self):
        if self.q < 2 or self.k < 2:
            raise ValueError(f"need q >= 2 and k >= 2, got q={self.q}, k={self.k}")

    @property
    def row(self) -> tuple[int, ...]:
        return tuple(self.q ** (self.k - i) for i in range(1, self.k + 1))

    @property
    def N(self) -> int:
        return self.q**self.k

    @property
    def d(self) -> int:
        return self.k + 1

    def simplex(self) -> OneRowSimplex:
        return OneRowSimplex(self.row, self.N)


# -- all-ones row -------------------------------------------------------------


def alpha_vector(a: int, N: int) -> AlphaVector:
    """Count ``t`` in ``1..N-1`` with ``ceil(a t / N) = i`` and ``N`` not dividing ``a t``."""
    if a < 1 or N < 2:
        raise ValueError(f"need a >= 1 and N >= 2, got a={a}, N={N}")
    entries = [0] * a
    for t in range(1, N):
        if (a * t) % N:
            entries[-(-a * t // N) - 1] += 1
    return AlphaVector(a, N, tuple(entries))


def allones_residue_rule(a: int, N: int, i: int) -> int:
    """Entry ``i+1`` of the alpha vector from the residue of ``i*r`` mod ``a`` (coprime case).

    Needs ``a >= 2``: for ``a = 1`` the rule would give ``N`` where the count is ``N - 1``.
    """
    if a < 2:
        raise ValueError(f"rule needs a >= 2, got a={a}")
    if math.gcd(a, N) != 1:
        raise ValueError(f"rule needs gcd(a, N) = 1, got gcd({a}, {N}) = {math.gcd(a, N)}")
    if not 0 <= i <= a - 1:
        raise ValueError(f"i={i} outside [0, {a - 1}]")
    q, r = divmod(N, a)
    return q + 1 if 1 <= a - (i * r) % a <= r - 1 else q


def allones_simplex(d: int, N: int) -> OneRowSimplex:
    return OneRowSimplex.reduced((1,) * (d - 1), N)


def allones_classify_brute(d: int, N: int) -> AllOnesClass:
    """Classify by enumerating the box polynomial; constancy is judged on degrees ``2..d-1``."""
    box = local_hstar(allones_simplex(d, N))
    if is_constant_on(box, 2, d - 1):
        return AllOnesClass.CONSTANT
    if is_unimodal(box):
        return AllOnesClass.UNIMODAL_NON_CONSTANT
    return AllOnesClass.NON_UNIMODAL


def allones_classify(d: int, N: int, self_check: bool = True) -> AllOnesClass:
    """Rule-based classification of ``B`` for the row ``(1, ..., 1, N)``.

    With ``a = d - 2`` and ``N = a q + r``: in the coprime case ``r`` in
    ``{0, 1}`` is constant and ``r`` in ``{2, a - 1}`` unimodal; otherwise the
    alpha vector is a ``gcd``-fold concatenation, unimodal (hence constant)
    exactly for ``r`` in ``{0, gcd}``.
    """
    if d < 3 or N < 2:
        raise ValueError(f"need d >= 3 and N >= 2, got d={d}, N={N}")
    a = d - 2
    r = N % a
    b = math.gcd(a, N)
    if b == 1:
        if r in (0, 1):
            verdict = AllOnesClass.CONSTANT
        elif r in (2, a - 1):
            verdict = AllOnesClass.UNIMODAL_NON_CONSTANT
        else:
            verdict = AllOnesClass.NON_UNIMODAL
    else:
        verdict = AllOnesClass.CONSTANT if r in (0, b) else AllOnesClass.NON_UNIMODAL
    if self_check:
        brute = allones_classify_brute(d, N)
        if brute is not verdict:
            raise InvariantViolation(
                f"all-ones rule says {verdict.value}, enumeration says {brute.value} (d={d}, N={N})"
            )
    return verdict


# -- geometric row ------------------------------------------------------------


def digit_poly_f(q: int, k: int) -> IntPolynomial:
    """``(t + ... + t^{q-1}) (1 + t + ... + t^{q-1})^{k-2}``: digit sums of ``ell`` in base ``q``."""
    GeometricFamily(q, k)
    f = IntPolynomial([0] + [1] * (q - 1))
    block = IntPolynomial([1] * q)
    for _ in range(k - 2):
        f = f * block
    return f


def geometric_delta(q: int, k: int) -> tuple[int, ...]:
    """Sums of the coefficients of ``f`` over consecutive blocks of ``q - 1`` degrees."""
    f = digit_poly_f(q, k)
    w = q - 1
    return tuple(sum(f[j] for j in range((i - 1) * w + 1, i * w + 1)) for i in range(1, k))


def geometric_local_hstar_fast(q: int, k: int) -> IntPolynomial:
    """Box polynomial of the geometric simplex: ``q * delta_i`` at degree ``i + 1``."""
    delta = geometric_delta(q, k)
    coeffs = [0] * (k + 2)
    for i, v in enumerate(delta, start=1):
        coeffs[i + 1] = q * v
    return IntPolynomial(coeffs)


def _digits(ell: int, q: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        ell, c = divmod(ell, q)
        out.append(c)
    return out


def geometric_age_base_q(q: int, k: int, ell: int) -> int:
    """``ceil(digit_sum / (q - 1))`` over the ``k - 1`` low base-``q`` digits of ``ell``."""
    if not 1 <= ell <= q ** (k - 1):
        raise ValueError(f"ell={ell} outside [1, {q ** (k - 1)}]")
    s = sum(_digits(ell, q, k - 1))
    return -(-s // (q - 1))


def geometric_age_direct(q: int, k: int, ell: int) -> int:
    """``ceil(sum_{i=1}^{k-1} frac(ell / q^i))`` in exact rationals."""
    total = sum((Fraction(ell % q**i, q**i) for i in range(1, k)), Fraction(0))
    return math.ceil(total)


def geometric_non_idp_witness(q: int, k: int, cap: int = DEFAULT_CAP) -> IdpWitness:
    """Certify that ``(q^{k-1}, ..., q, 1, q^k - 1)`` in ``2S`` is not a sum of two lattice points of ``S``."""
    fam = GeometricFamily(q, k)
    s = fam.simplex()
    point = fam.row + (fam.N - 1,)
    lifted = (2,) + point
    lam = s.barycentric(lifted)
    if any(x < 0 for x in lam) or sum(lam) != 2:
        raise InvariantViolation(f"{point} is not in 2S for q={q}, k={k}")
    if is_decomposable(s, lifted, cap):
        raise InvariantViolation(f"{point} decomposes for q={q}, k={k}")
    return IdpWitness(point, 2, False)
