"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from firmhom.zlinalg import IntMatrix


def int_matrices(max_rows=6, max_cols=6, lo=-9, hi=9, min_dim=0):
    @st.composite
    def build(draw):
        m = draw(st.integers(min_dim, max_rows))
        n = draw(st.integers(min_dim, max_cols))
        rows = [[draw(st.integers(lo, hi)) for _ in range(n)] for _ in range(m)]
        return IntMatrix(m, n, rows)
    return build()


def group_orders(max_gens=3):
    return st.lists(st.sampled_from([0, 0, 2, 3, 4, 6]), min_size=0, max_size=max_gens)


seeds = st.integers(0, 10 ** 6)
