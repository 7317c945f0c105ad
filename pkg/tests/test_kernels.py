import os
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from boxpoly import kernels
from boxpoly.simplex import OneRowSimplex
from strategies import simplices

needs_compiled = pytest.mark.skipif(kernels.BACKEND != "cython", reason="extension not built")


def _direct(steps, N, lo, hi):
    ages, zeros = [], []
    for ell in range(lo, hi):
        res = [(ell * s) % N for s in steps]
        ages.append(sum(res) // N)
        zeros.append(sum(1 for r in res if r == 0))
    return ages, zeros


def _norm(result):
    return [x if isinstance(x, int) else list(x) for x in result]


@given(simplices(), st.data())
def test_python_kernel_matches_direct(s, data):
    lo = data.draw(st.integers(0, s.N))
    hi = data.draw(st.integers(lo, s.N))
    ages, zeros = kernels.age_table(s.steps, s.N, lo, hi, backend="python")
    assert (list(ages), list(zeros)) == _direct(s.steps, s.N, lo, hi)


@needs_compiled
@given(simplices(), st.data())
def test_backends_agree(s, data):
    lo = data.draw(st.integers(0, s.N))
    hi = data.draw(st.integers(lo, s.N))
    py = kernels.age_counts(s.steps, s.N, lo, hi, backend="python")
    cy = kernels.age_counts(s.steps, s.N, lo, hi, backend="cython")
    assert _norm(py) == _norm(cy)
    py = kernels.age_table(s.steps, s.N, lo, hi, backend="python")
    cy = kernels.age_table(s.steps, s.N, lo, hi, backend="cython")
    assert _norm(py) == _norm(cy)


def test_age_counts_histograms():
    s = OneRowSimplex((1, 1, 1, 1), 6)
    all_h, box_h, best = kernels.age_counts(s.steps, s.N)
    assert list(all_h) == [1, 0, 2, 2, 1, 0]
    assert list(box_h) == [0, 0, 1, 1, 1, 0]
    assert best == 2


def test_empty_range():
    s = OneRowSimplex((1, 2), 5)
    all_h, box_h, best = kernels.age_counts(s.steps, s.N, 3, 3)
    assert sum(all_h) == 0 and sum(box_h) == 0 and best == -1


def test_huge_volume_falls_back_to_python():
    N = 2**70 + 1
    s = OneRowSimplex((3, 5), N)
    ages, zeros = kernels.age_table(s.steps, s.N, 0, 4)
    assert list(ages) == _direct(s.steps, N, 0, 4)[0]
    with pytest.raises(RuntimeError):
        kernels.age_table(s.steps, s.N, 0, 4, backend="cython")


def test_env_var_forces_fallback():
    env = dict(os.environ, BOXPOLY_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from boxpoly import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
