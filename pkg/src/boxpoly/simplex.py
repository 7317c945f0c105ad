"""One-row Hermite normal form simplices and their parallelepiped group.

A one-row simplex is given by its last row ``(a_1, ..., a_{d-1}, N)``; its
vertices are the origin, the unit vectors ``e_1..e_{d-1}`` and ``(a, N)``.
The parallelepiped group is cyclic of order ``N``; element ``ell`` has
fractional coordinates ``residues / N`` with

    residues = (ell*a0 mod N, -ell*a_1 mod N, ..., -ell*a_{d-1} mod N, ell mod N)

where ``a0 = sum(a) - 1``. The age of an element is ``sum(residues) / N``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from boxpoly import kernels

__all__ = [
    "SimplexError",
    "OneRowSimplex",
    "GeneralHnfSimplex",
    "GroupElementView",
    "validate",
    "parse_spec",
    "normalized_volume",
    "group_element",
    "closed_form_age",
    "in_open_box",
    "iterate_group",
    "ell_chunks",
    "ages",
    "row_modulus",
    "DegenerateRowError",
]


class SimplexError(ValueError):
    pass


class DegenerateRowError(ValueError):
    """Raised when ``lcm(a_1, ..., a_{d-1}, sum(a) - 1)`` is undefined."""


def row_modulus(a: Sequence[int]) -> int:
    """``lcm(a_1, ..., a_{d-1}, sum(a) - 1)``; entries must be positive and sum to >= 2."""
    a = tuple(int(x) for x in a)
    if not a or any(x < 1 for x in a):
        raise DegenerateRowError(f"row {a} needs every entry >= 1")
    if sum(a) < 2:
        raise DegenerateRowError(f"row {a} has sum(a) - 1 = 0")
    return math.lcm(*a, sum(a) - 1)


@dataclass(frozen=True)
class OneRowSimplex:
    a: tuple[int, ...]
    N: int

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "N", int(self.N))
        if self.N < 1:
            raise SimplexError(f"N must be >= 1, got {self.N}")
        if not a:
            raise SimplexError("dimension d >= 2 required (empty row)")
        for i, x in enumerate(a, start=1):
            if x < 0 or x >= self.N:
                raise SimplexError(f"a_{i}={x} violates 0 <= a_i < N={self.N}")

    @classmethod
    def reduced(cls, a: Sequence[int], N: int) -> OneRowSimplex:
        """Build the simplex for row ``(a, N)`` after reducing entries mod ``N``.

        The shear ``x_j -> x_j - floor(a_j/N) x_d`` is unimodular and fixes the
        other vertices, so the reduced simplex is equivalent to the original.
        """
        return cls(tuple(int(x) % N for x in a), N)

    @property
    def d(self) -> int:
        return len(self.a) + 1

    @property
    def a0(self) -> int:
        return sum(self.a) - 1

    @property
    def steps(self) -> tuple[int, ...]:
        """Residue increments per group coordinate."""
        N = self.N
        return (self.a0 % N,) + tuple((-x) % N for x in self.a) + (1 % N,)

    def vertices(self) -> list[tuple[int, ...]]:
        d = self.d
        verts = [(0,) * d]
        for i in range(d - 1):
            verts.append(tuple(1 if j == i else 0 for j in range(d)))
        verts.append(self.a + (self.N,))
        return verts

    def extended_matrix(self) -> list[tuple[int, ...]]:
        """Vertices lifted to height one, as rows."""
        return [(1,) + v for v in self.vertices()]

    def scaled_barycentric(self, point: Sequence[int]) -> tuple[int, ...]:
        """Return ``N * lambda`` where ``lambda @ A = point`` for the extended matrix ``A``.

        ``point`` is ``(height, x_1, ..., x_d)``. Exact integer arithmetic.
        """
        N = self.N
        h, xs, xd = point[0], point[1:-1], point[-1]
        lam = [N * x - a * xd for x, a in zip(xs, self.a)]
        lam0 = N * h - sum(lam) - xd
        return (lam0, *lam, xd)

    def barycentric(self, point: Sequence[int]) -> tuple[Fraction, ...]:
        return tuple(Fraction(v, self.N) for v in self.scaled_barycentric(point))

    def in_cone(self, point: Sequence[int]) -> bool:
        return all(v >= 0 for v in self.scaled_barycentric(point))

    def spec(self) -> str:
        return ",".join(str(x) for x in self.a) + f";{self.N}"

    def __str__(self) -> str:
        return self.spec()


@dataclass(frozen=True)
class GeneralHnfSimplex:
    """Simplex given by a ``(d+1) x d`` lower-triangular HNF vertex matrix."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) < 2:
            raise SimplexError("need at least two rows")
        d = len(rows) - 1
        if any(len(r) != d for r in rows):
            raise SimplexError(f"every row must have {d} entries")
        if any(rows[0]):
            raise SimplexError("first row must be zero")
        for i in range(1, d + 1):
            row = rows[i]
            diag = row[i - 1]
            if diag < 1:
                raise SimplexError(f"diagonal entry a_{i},{i}={diag} must be >= 1")
            for j in range(1, d + 1):
                v = row[j - 1]
                if j < i and not 0 <= v < diag:
                    raise SimplexError(f"a_{i},{j}={v} violates 0 <= a_ij < a_ii={diag}")
                if j > i and v != 0:
                    raise SimplexError(f"a_{i},{j}={v} above the diagonal must be 0")

    @property
    def d(self) -> int:
        return len(self.rows) - 1

    def vertices(self) -> list[tuple[int, ...]]:
        return list(self.rows)

    def extended_matrix(self) -> list[tuple[int, ...]]:
        return [(1,) + r for r in self.rows]


@dataclass(frozen=True)
class GroupElementView:
    ell: int
    residues: tuple[int, ...]
    age: int

    def fractional(self, N: int) -> tuple[Fraction, ...]:
        return tuple(Fraction(r, N) for r in self.residues)

    @property
    def zero_count(self) -> int:
        return sum(1 for r in self.residues if r == 0)


_SPEC_RE = re.compile(r"^\s*([^;]*);\s*(\S+)\s*$")


def parse_spec(text: str) -> OneRowSimplex:
    """Parse ``"a1,a2,...,ak;N"``; ``"1x16;331"`` is shorthand for sixteen ones."""
    m = _SPEC_RE.match(text)
    if not m:
        raise SimplexError(f"cannot parse {text!r}: expected 'a1,...,ak;N'")
    row_text, n_text = m.groups()
    entries: list[int] = []
    pos = 0
    for field in row_text.split(","):
        token = field.strip()
        try:
            if "x" in token or "×" in token:
                value, count = re.split(r"[x×]", token)
                entries.extend([int(value)] * int(count))
            else:
                entries.append(int(token))
        except ValueError:
            raise SimplexError(
                f"bad row entry {token!r} at character {pos} of {text!r}"
            ) from None
        pos += len(field) + 1
    try:
        N = int(n_text)
    except ValueError:
        raise SimplexError(f"bad volume {n_text!r} after ';' in {text!r}") from None
    return validate(entries, N)


def validate(a: Sequence[int], N: int) -> OneRowSimplex:
    return OneRowSimplex(tuple(a), N)


def normalized_volume(s: OneRowSimplex | GeneralHnfSimplex) -> int:
    if isinstance(s, OneRowSimplex):
        return s.N
    return math.prod(s.rows[i][i - 1] for i in range(1, s.d + 1))


def group_element(s: OneRowSimplex, ell: int) -> GroupElementView:
    if not 0 <= ell < s.N:
        raise SimplexError(f"ell={ell} outside [0, {s.N - 1}]")
    residues = tuple((ell * st) % s.N for st in s.steps)
    return GroupElementView(ell, residues, sum(residues) // s.N)


def closed_form_age(s: OneRowSimplex, ell: int) -> int:
    """Age of ``ell`` times the negated generator, via floors and ceilings.

    ``1 + ceil(ell*a0/N) - sum floor(ell*a_i/N)``; this is the age of
    ``group_element(s, -ell mod N)`` whenever that element is in the open box.
    """
    N = s.N
    return 1 + (-(-ell * s.a0 // N)) - sum(ell * x // N for x in s.a)


def in_open_box(g: GroupElementView) -> bool:
    return all(g.residues)


def ell_chunks(N: int, chunk: int) -> list[tuple[int, int]]:
    """Split ``[0, N)`` into half-open ranges of at most ``chunk`` elements."""
    return [(lo, min(lo + chunk, N)) for lo in range(0, N, chunk)]


def iterate_group(s: OneRowSimplex, lo: int = 0, hi: int | None = None) -> Iterator[GroupElementView]:
    """Yield the group elements for ``ell`` in ``[lo, hi)`` (default: all ``N``)."""
    hi = s.N if hi is None else hi
    if not 0 <= lo <= hi <= s.N:
        raise SimplexError(f"range [{lo}, {hi}) outside [0, {s.N}]")
    N = s.N
    steps = s.steps
    res = [(lo * st) % N for st in steps]
    for ell in range(lo, hi):
        yield GroupElementView(ell, tuple(res), sum(res) // N)
        res = [(r + st) % N for r, st in zip(res, steps)]


def ages(s: OneRowSimplex, lo: int = 0, hi: int | None = None) -> tuple[list[int], list[int]]:
    """Per-element ages and zero-residue counts, via the fast kernel."""
    return kernels.age_table(s.steps, s.N, lo, hi)
