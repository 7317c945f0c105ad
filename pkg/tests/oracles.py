"""Independent brute-force oracles used by the test suite.

Nothing here calls the package's kernels: lattice points are counted from
barycentric coordinates written out from scratch with ``Fraction``.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction


def barycentric(a, N, h, x):
    """Barycentric coordinates of ``(h, x)`` w.r.t. the lifted vertices of the simplex ``(a; N)``."""
    xd = Fraction(x[-1])
    lam_d = xd / N
    lam = [Fraction(xj) - Fraction(aj) * lam_d for xj, aj in zip(x[:-1], a)]
    lam0 = h - sum(lam) - lam_d
    return [lam0, *lam, lam_d]


def parallelepiped_points(a, N):
    """Lattice points of the half-open parallelepiped as ``(height, lambdas)``."""
    out = []
    for xd in range(N):
        xs = [math.ceil(Fraction(aj * xd, N)) for aj in a]
        lam_tail = [Fraction(xj) - Fraction(aj * xd, N) for xj, aj in zip(xs, a)] + [Fraction(xd, N)]
        h = math.ceil(sum(lam_tail))
        lam = barycentric(a, N, h, xs + [xd])
        assert all(0 <= v < 1 for v in lam)
        out.append((h, lam))
    return out


def brute_hstar(a, N):
    d = len(a) + 1
    c = [0] * (d + 1)
    for h, _ in parallelepiped_points(a, N):
        c[h] += 1
    return c


def brute_box(a, N):
    d = len(a) + 1
    c = [0] * (d + 1)
    for h, lam in parallelepiped_points(a, N):
        if all(v > 0 for v in lam):
            c[h] += 1
    return c


def dilate_count(a, N, t, interior):
    """Lattice points of ``t*S`` (or its interior), summed over the last coordinate.

    For fixed ``x_d`` the scaled coordinates ``N*lambda_j`` run over one residue
    class mod ``N`` each, so the rest is a stars-and-bars count.
    """
    d = len(a) + 1
    total = 0
    for xd in range(t * N + 1):
        if interior and (xd == 0 or xd == t * N):
            continue
        base = 0
        for aj in a:
            c = (-aj * xd) % N
            if interior and c == 0:
                c = N
            base += c
        # N*lambda_0 = N*t - x_d - sum(N*lambda_j); need >= 0 (or > 0).
        slack = N * t - xd - base - (1 if interior else 0)
        if slack < 0:
            continue
        R = slack // N
        total += math.comb(R + d - 1, d - 1)
    return total


def naive_dilate_count(a, N, t, interior):
    """Bounding-box enumeration; only for tiny cases."""
    d = len(a) + 1
    ranges = [range(0, t * max(1, aj) + 1) for aj in a] + [range(0, t * N + 1)]
    count = 0
    for x in itertools.product(*ranges):
        lam = barycentric(a, N, t, x)
        if interior:
            count += all(v > 0 for v in lam)
        else:
            count += all(v >= 0 for v in lam)
    return count


def series_to_h(counts, d):
    """Numerator of ``sum_t counts[t] z^t`` over ``(1 - z)^(d+1)``, up to degree ``d + 1``."""
    out = []
    for i in range(d + 2):
        out.append(sum((-1) ** j * math.comb(d + 1, j) * counts[i - j] for j in range(i + 1)))
    return out


def interior_hstar_by_counting(a, N):
    d = len(a) + 1
    counts = [0] + [dilate_count(a, N, t, True) for t in range(1, d + 2)]
    return series_to_h(counts, d)


def hstar_by_counting(a, N):
    d = len(a) + 1
    counts = [1] + [dilate_count(a, N, t, False) for t in range(1, d + 2)]
    return series_to_h(counts, d)


def smallest_interior_dilate_by_counting(a, N):
    d = len(a) + 1
    for t in range(1, d + 2):
        if dilate_count(a, N, t, True):
            return t
    raise AssertionError("no interior point up to d + 1")


def partition_count(n):
    """p(n) by the standard coin-change recurrence."""
    p = [1] + [0] * n
    for part in range(1, n + 1):
        for m in range(part, n + 1):
            p[m] += p[m - part]
    return p[n]


def distinct_partition_count(n):
    q = [1] + [0] * n
    for part in range(1, n + 1):
        for m in range(n, part - 1, -1):
            q[m] += q[m - part]
    return q[n]
