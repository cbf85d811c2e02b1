import hypothesis
from hypothesis import strategies as st

from cremona.arith import Poly, RatFunc

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile("default")

rats = st.fractions(min_value=-20, max_value=20, max_denominator=20)
small_rats = st.fractions(min_value=-5, max_value=5, max_denominator=3)


@st.composite
def polys(draw, max_degree=4):
    return Poly(draw(st.lists(rats, max_size=max_degree + 1)))


@st.composite
def nonzero_polys(draw, max_degree=4):
    p = draw(polys(max_degree))
    return p if p else Poly((draw(rats.filter(bool)),))


@st.composite
def ratfuncs(draw, nonzero=False):
    num = draw(nonzero_polys()) if nonzero else draw(polys())
    return RatFunc(num, draw(nonzero_polys(2)))
