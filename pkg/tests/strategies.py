"""Hypothesis strategies over the four corpus field kinds."""

from hypothesis import strategies as st

from nlalg.corpus import FIELD_KINDS
from nlalg.fields import ExtField, PrimeField, QuadExt
from nlalg.linalg import Matrix
from nlalg.poly import Poly

fields = st.sampled_from(list(FIELD_KINDS.values()))
ordered_fields = st.sampled_from([FIELD_KINDS["Q"], FIELD_KINDS["Q(sqrt 2)"]])
small_ints = st.integers(-4, 4)


def elements(F):
    if isinstance(F, QuadExt):
        q = st.fractions(min_value=-3, max_value=3, max_denominator=3)
        return st.tuples(q, q).map(F)
    if isinstance(F, PrimeField):
        return st.integers(0, F.p - 1).map(F)
    if isinstance(F, ExtField):
        return st.tuples(*[st.integers(0, F.p - 1)] * F.degree).map(F)
    return st.fractions(min_value=-4, max_value=4, max_denominator=4).map(F)


@st.composite
def field_and_elements(draw, k=3, field_strategy=fields):
    F = draw(field_strategy)
    return F, [draw(elements(F)) for _ in range(k)]


@st.composite
def polys(draw, F, max_degree=5, nonzero=False):
    cs = draw(st.lists(elements(F), min_size=1 if nonzero else 0, max_size=max_degree + 1))
    f = Poly(F, cs)
    if nonzero and f.is_zero:
        f = Poly.one(F)
    return f


@st.composite
def matrices(draw, F, m, n=None):
    n = m if n is None else n
    return Matrix(F, [[draw(elements(F)) for _ in range(n)] for _ in range(m)])
