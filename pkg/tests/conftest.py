from hypothesis import strategies as st

from aldkit.core import PairedWord


@st.composite
def words(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    a = draw(st.integers(0, (1 << n) - 1))
    b = draw(st.integers(0, (1 << n) - 1))
    return PairedWord(n, a, b)


@st.composite
def word_tuples(draw, count, min_n=1, max_n=8):
    """Several words sharing one length."""
    n = draw(st.integers(min_n, max_n))
    out = []
    for _ in range(count):
        a = draw(st.integers(0, (1 << n) - 1))
        b = draw(st.integers(0, (1 << n) - 1))
        out.append(PairedWord(n, a, b))
    return tuple(out)


lambdas = st.integers(1, 4)
