from hypothesis import strategies as st

from boxpoly.simplex import OneRowSimplex


@st.composite
def simplices(draw, max_d=7, max_n=300, min_n=1):
    N = draw(st.integers(min_n, max_n))
    d = draw(st.integers(2, max_d))
    a = tuple(draw(st.integers(0, N - 1)) for _ in range(d - 1))
    return OneRowSimplex(a, N)


@st.composite
def rows(draw, max_len=5, max_entry=6):
    """Positive rows with ``sum >= 2``, so that the asymptotic modulus is defined."""
    n = draw(st.integers(1, max_len))
    a = tuple(draw(st.integers(1, max_entry)) for _ in range(n))
    if sum(a) < 2:
        a = a + (1,)
    return a
