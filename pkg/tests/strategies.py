"""Shared hypothesis strategies."""

from fractions import Fraction

from hypothesis import strategies as st

small_ints = st.integers(min_value=-3, max_value=3)
rationals = st.builds(Fraction, st.integers(-4, 4), st.integers(1, 3))


def matrices(rows, cols, elements=small_ints):
    return st.lists(st.lists(elements, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


@st.composite
def invertible_matrices(draw, n):
    """Unit lower times unit upper triangular, so always invertible."""
    low = [[Fraction(1) if r == c else (Fraction(draw(small_ints)) if c < r else Fraction(0)) for c in range(n)] for r in range(n)]
    up = [[Fraction(1) if r == c else (Fraction(draw(small_ints)) if c > r else Fraction(0)) for c in range(n)] for r in range(n)]
    perm = draw(st.permutations(range(n)))
    lu = [[sum(low[r][k] * up[k][c] for k in range(n)) for c in range(n)] for r in range(n)]
    return [lu[perm[r]] for r in range(n)]
