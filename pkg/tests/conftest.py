from fractions import Fraction

from hypothesis import strategies as st

from gfpipe.ratfun import FieldElem
from gfpipe.series import Series

small_ints = st.integers(min_value=-3, max_value=3)


@st.composite
def field_elems(draw, max_deg=2):
    num = draw(st.lists(small_ints, min_size=1, max_size=max_deg + 1))
    den = draw(
        st.lists(small_ints, min_size=1, max_size=max_deg + 1).filter(
            lambda cs: any(cs)
        )
    )
    return FieldElem(tuple(num), tuple(den))


@st.composite
def nonzero_field_elems(draw, max_deg=2):
    return draw(field_elems(max_deg).filter(lambda v: not v.is_zero()))


# small exact scalars keep the polynomial degrees in properties manageable
@st.composite
def scalars(draw):
    from gfpipe.ratfun import R, fe

    kind = draw(st.integers(0, 2))
    if kind == 0:
        return fe(draw(small_ints))
    if kind == 1:
        return fe(Fraction(draw(small_ints), draw(st.integers(1, 3))))
    return fe(draw(small_ints)) + R * draw(small_ints)


@st.composite
def series_values(draw, prec=5, constant=None, linear=None):
    cs = [draw(scalars()) for _ in range(prec)]
    if constant is not None:
        cs[0] = constant
    if linear is not None and prec > 1:
        cs[1] = linear
    return Series(cs)

