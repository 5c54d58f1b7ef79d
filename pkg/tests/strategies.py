from hypothesis import strategies as st

from radzero.algebra import AlgebraSpec


@st.composite
def specs(draw, max_k=4, max_r=8, min_r=1):
    k = draw(st.integers(1, max_k))
    r = draw(st.lists(st.integers(min_r, max_r), min_size=k, max_size=k))
    j = draw(st.lists(st.lists(st.booleans(), min_size=k, max_size=k), min_size=k, max_size=k))
    return AlgebraSpec(k, r, j)
