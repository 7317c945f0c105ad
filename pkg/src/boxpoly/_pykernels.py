"""Pure-Python ell-loop kernels.

Both functions walk ``ell = lo .. hi-1`` over the cyclic parallelepiped group
of order ``N``. ``steps`` holds the residue increment of each coordinate
(already reduced mod ``N``), so the residues of ``ell`` are ``ell*steps mod N``.
Arbitrary-precision safe; used when the compiled extension is missing or the
inputs overflow 64-bit arithmetic.
"""


def age_counts(steps, N, lo, hi):
    """Return ``(all_hist, box_hist, min_interior)`` over ``ell`` in ``[lo, hi)``.

    ``all_hist[t]`` counts elements of age ``t``, ``box_hist[t]`` counts only
    those with every residue nonzero, and ``min_interior`` is the minimum of
    ``age + #zero residues`` (``-1`` for an empty range).
    """
    width = len(steps)
    all_hist = [0] * width
    box_hist = [0] * width
    best = -1
    res = [(lo * s) % N for s in steps]
    pairs = list(zip(range(width), steps))
    for _ in range(lo, hi):
        age = sum(res) // N
        zeros = res.count(0)
        all_hist[age] += 1
        if not zeros:
            box_hist[age] += 1
        if best < 0 or age + zeros < best:
            best = age + zeros
        for j, s in pairs:
            r = res[j] + s
            res[j] = r - N if r >= N else r
    return all_hist, box_hist, best


def age_table(steps, N, lo, hi):
    """Return per-element ``(ages, zero_counts)`` lists for ``ell`` in ``[lo, hi)``."""
    ages = []
    zeros = []
    for ell in range(lo, hi):
        res = [(ell * s) % N for s in steps]
        ages.append(sum(res) // N)
        zeros.append(res.count(0))
    return ages, zeros
