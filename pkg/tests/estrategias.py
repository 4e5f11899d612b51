"""
Estrategias de hypothesis compartidas por las pruebas
"""

from hypothesis import strategies as st

from algebra.coeff import LaurentPoly, Scalar
from algebra.pbw import u_from_monomial, u_zero

coeficientes = st.integers(min_value=-4, max_value=4)


@st.composite
def laurent_polys(draw, con_varsigma=True, max_terminos=4):
    exponentes_v = st.integers(-2, 2) if con_varsigma else st.just(0)
    terms = draw(st.dictionaries(
        st.tuples(st.integers(-3, 3), exponentes_v),
        coeficientes,
        max_size=max_terminos,
    ))
    return LaurentPoly(terms)


@st.composite
def scalars(draw, con_varsigma=True):
    num = draw(laurent_polys(con_varsigma=con_varsigma, max_terminos=3))
    den = draw(laurent_polys(con_varsigma=con_varsigma, max_terminos=2).filter(lambda d: not d.is_zero()))
    return Scalar(num, den)


@st.composite
def u_elements(draw, con_varsigma=False, max_terminos=3):
    total = u_zero()
    for _ in range(draw(st.integers(0, max_terminos))):
        a = draw(st.integers(0, 2))
        b = draw(st.integers(-2, 2))
        c = draw(st.integers(0, 2))
        coef = draw(st.sampled_from([-2, -1, 1, 2, 3]))
        e_q = draw(st.integers(-2, 2))
        e_v = draw(st.integers(0, 1)) if con_varsigma else 0
        total = total + u_from_monomial(a, b, c, Scalar.monomial(e_q, e_v, coef))
    return total
