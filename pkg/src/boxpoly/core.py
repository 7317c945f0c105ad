"""Exact polynomial/distribution types, shape predicates and floor-ceiling identities."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

__all__ = [
    "IntPolynomial",
    "CoefficientDistribution",
    "FloorIdentityParams",
    "EmptyDistributionError",
    "is_unimodal",
    "is_strictly_unimodal",
    "is_palindromic",
    "is_constant_on",
    "to_distribution",
    "tv_distance",
    "floor_div",
    "ceil_div",
    "floor_identity_offset",
    "floor_identity_rescale",
    "floor_identity_gap",
    "floor_identity_numerator",
]


class EmptyDistributionError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class IntPolynomial:
    """Dense polynomial with nonnegative integer coefficients.

    ``coeffs[i]`` is the coefficient of ``z**i``. Trailing zeros are kept as
    stored (a local h*-vector is naturally indexed ``0..d``) but ignored by
    equality and hashing.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        values = tuple(int(c) for c in coeffs)
        for i, c in enumerate(values):
            if c < 0:
                raise ValueError(f"negative coefficient {c} at degree {i}")
        object.__setattr__(self, "coeffs", values)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPolynomial:
        return cls([0] * degree + [coeff])

    def trimmed(self) -> tuple[int, ...]:
        c = self.coeffs
        end = len(c)
        while end and c[end - 1] == 0:
            end -= 1
        return c[:end]

    def padded(self, length: int) -> IntPolynomial:
        """Return a copy stored with exactly ``length`` entries."""
        core = self.trimmed()
        if len(core) > length:
            raise ValueError(f"degree {len(core) - 1} does not fit in length {length}")
        return IntPolynomial(core + (0,) * (length - len(core)))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.trimmed()) - 1

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __call__(self, z):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.trimmed() == other.trimmed()
        return NotImplemented

    def __hash__(self):
        return hash(self.trimmed())

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self), len(other))
        return IntPolynomial(self[i] + other[i] for i in range(n))

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(other * c for c in self.coeffs)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self.trimmed(), other.trimmed()
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by ``z**k``."""
        return IntPolynomial((0,) * k + self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "z" if i == 1 else f"z^{i}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class CoefficientDistribution:
    """Exact probability vector ``f_i / f(1)``."""

    probs: tuple[Fraction, ...]

    def __post_init__(self):
        if sum(self.probs, Fraction(0)) != 1:
            raise ValueError("distribution does not sum to 1")
        if any(p < 0 or p > 1 for p in self.probs):
            raise ValueError("distribution entry outside [0, 1]")

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.probs):
            return self.probs[i]
        return Fraction(0)

    def __len__(self) -> int:
        return len(self.probs)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.probs)

    def as_floats(self) -> list[float]:
        return [float(p) for p in self.probs]


@dataclass(frozen=True)
class FloorIdentityParams:
    """Parameter bundle for the floor/ceiling identity predicates.

    ``n`` sets the perturbation ``1/n`` of the denominator ``k*m + 1/n``.
    """

    k: int
    m: int
    n: int
    i: int = 0
    delta: int = 0
    r: int = 1


def _coeffs(p) -> Sequence[int]:
    return p.coeffs if isinstance(p, IntPolynomial) else tuple(p)


def is_unimodal(p) -> bool:
    """Weak unimodality over the full stored vector, zero padding included."""
    c = _coeffs(p)
    n = len(c)
    i = 0
    while i + 1 < n and c[i] <= c[i + 1]:
        i += 1
    while i + 1 < n and c[i] >= c[i + 1]:
        i += 1
    return i >= n - 1


def is_strictly_unimodal(p) -> bool:
    """Strict rise, a peak of width at most two, strict fall, on the nonzero support.

    The zero polynomial counts as strictly unimodal.
    """
    c = list(_coeffs(p))
    nz = [i for i, x in enumerate(c) if x]
    if not nz:
        return True
    c = c[nz[0] : nz[-1] + 1]
    n = len(c)
    i = 0
    while i + 1 < n and c[i] < c[i + 1]:
        i += 1
    if i + 1 < n and c[i] == c[i + 1]:
        i += 1
    while i + 1 < n and c[i] > c[i + 1]:
        i += 1
    return i == n - 1


def is_palindromic(p, lo: int, hi: int) -> bool:
    if lo < 0 or hi < lo:
        raise ValueError(f"need 0 <= lo <= hi, got lo={lo}, hi={hi}")
    c = p if isinstance(p, IntPolynomial) else IntPolynomial(p)
    return all(c[lo + j] == c[hi - j] for j in range((hi - lo) // 2 + 1))


def is_constant_on(p, lo: int, hi: int) -> bool:
    """True iff coefficients ``lo..hi`` are all equal and every other one is zero."""
    c = p if isinstance(p, IntPolynomial) else IntPolynomial(p)
    window = {c[i] for i in range(lo, hi + 1)}
    outside = any(c[i] for i in range(len(c)) if i < lo or i > hi)
    return len(window) <= 1 and not outside


def to_distribution(p) -> CoefficientDistribution:
    c = _coeffs(p)
    total = sum(c)
    if total == 0:
        raise EmptyDistributionError("empty distribution")
    return CoefficientDistribution(tuple(Fraction(x, total) for x in c))


def tv_distance(d1: CoefficientDistribution, d2: CoefficientDistribution) -> Fraction:
    n = max(len(d1), len(d2))
    return sum((abs(d1[i] - d2[i]) for i in range(n)), Fraction(0)) / 2


# -- floor/ceiling identities -------------------------------------------------
#
# x / (k*m + r/n) is cleared to n*x / (k*m*n + r) so everything stays integral.


def floor_div(num: int, den: int) -> int:
    return num // den


def ceil_div(num: int, den: int) -> int:
    return -(-num // den)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def _scaled(k: int, m: int, n: int, r: int, x: int) -> tuple[int, int]:
    return n * x, k * m * n + r


def _floor_ceil(k: int, m: int, n: int, r: int, x: int) -> tuple[int, int]:
    num, den = _scaled(k, m, n, r, x)
    return floor_div(num, den), ceil_div(num, den)


def floor_identity_offset(k: int, m: int, n: int, i: int, delta: int) -> bool:
    """Adding ``delta < k`` to ``k*i + 1`` keeps floor and ceiling over ``k*m + 1/n``."""
    _require(k >= 1 and m >= 1 and n >= 1, "k, m, n must be positive")
    _require(0 <= i <= m * n - 1, f"i={i} outside [0, {m * n - 1}]")
    _require(0 <= delta <= k - 1, f"delta={delta} outside [0, {k - 1}]")
    return _floor_ceil(k, m, n, 1, k * i + 1) == _floor_ceil(k, m, n, 1, k * i + delta + 1)


def floor_identity_rescale(k: int, m: int, n: int, q: int) -> bool:
    _require(k >= 1 and m >= 1 and n >= 1, "k, m, n must be positive")
    _require(0 <= q <= m * n - 1, f"q={q} outside [0, {m * n - 1}]")
    return _floor_ceil(k, m, n, 1, k * q + 1) == _floor_ceil(1, m, n, 1, q + 1)


def floor_identity_gap(k: int, m: int, n: int, i: int, delta: int) -> bool:
    """floor(Q) * (1 + 1/k) < Q for Q = (k*i + delta + 1) / (k*m + 1/n)."""
    _require(k >= 1 and m >= 1 and n >= 1, "k, m, n must be positive")
    _require(0 <= i <= m * n - 1, f"i={i} outside [0, {m * n - 1}]")
    _require(0 <= delta <= k - 1, f"delta={delta} outside [0, {k - 1}]")
    _require(delta >= (n - 1) * m + 1, f"delta={delta} below (n-1)m+1={(n - 1) * m + 1}")
    _require(k >= n, f"k={k} < n={n}")
    num, den = _scaled(k, m, n, 1, k * i + delta + 1)
    fl = floor_div(num, den)
    # fl * (k+1)/k < num/den  <=>  fl*(k+1)*den < k*num
    return fl * (k + 1) * den < k * num


def floor_identity_numerator(k: int, m: int, n: int, r: int, i: int, delta: int) -> bool:
    """Replacing ``1/n`` by ``r/n`` in the denominator keeps floor and ceiling when delta >= mn."""
    _require(k >= 1 and m >= 1 and n >= 1, "k, m, n must be positive")
    mn = m * n
    _require(1 <= r <= mn, f"r={r} outside [1, {mn}]")
    _require(k >= mn, f"k={k} < mn={mn}")
    _require(mn <= delta <= k - 1, f"delta={delta} outside [{mn}, {k - 1}]")
    _require(0 <= i <= mn - 1, f"i={i} outside [0, {mn - 1}]")
    x = k * i + delta + 1
    return _floor_ceil(k, m, n, r, x) == _floor_ceil(k, m, n, 1, x)
