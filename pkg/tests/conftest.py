"""Shared hypothesis strategies for exact q,t-arithmetic tests."""

from fractions import Fraction

from hypothesis import strategies as st

from nablaqt.qt_coeff import QTFraction, QTLaurent

small_rationals = st.builds(
    Fraction,
    st.integers(min_value=-6, max_value=6),
    st.integers(min_value=1, max_value=4),
)

exponents = st.tuples(
    st.integers(min_value=-2, max_value=3), st.integers(min_value=-2, max_value=3)
)


@st.composite
def laurents(draw, max_terms=4):
    terms = draw(
        st.dictionaries(exponents, small_rationals, min_size=0, max_size=max_terms)
    )
    return QTLaurent(terms)


@st.composite
def nonzero_laurents(draw, max_terms=4):
    p = draw(laurents(max_terms))
    if p.is_zero:
        return QTLaurent.one()
    return p


@st.composite
def fractions_qt(draw):
    return QTFraction(draw(laurents()), draw(nonzero_laurents(max_terms=2)))


@st.composite
def nonzero_fractions_qt(draw):
    f = draw(fractions_qt())
    if f.is_zero:
        return QTFraction.one()
    return f
