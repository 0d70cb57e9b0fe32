import hypothesis.strategies as st

from upsemigroups.core import CayleyTable

EXAMPLE_DOT = [
    [0, 1, 2, 3],
    [0, 0, 2, 3],
    [0, 1, 0, 3],
    [0, 1, 2, 0],
]
EXAMPLE_STAR = [
    [0, 0, 0, 0],
    [0, 0, 0, 0],
    [0, 0, 0, 1],
    [0, 0, 1, 0],
]


@st.composite
def cayley_tables(draw, min_order=1, max_order=4):
    n = draw(st.integers(min_order, max_order))
    entries = draw(st.lists(st.integers(0, n - 1), min_size=n * n, max_size=n * n))
    return CayleyTable(n, tuple(entries))


@st.composite
def table_pairs(draw, min_order=1, max_order=4):
    f = draw(cayley_tables(min_order, max_order))
    entries = draw(st.lists(st.integers(0, f.order - 1), min_size=f.order ** 2, max_size=f.order ** 2))
    return f, CayleyTable(f.order, tuple(entries))
