from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from algebra.coeff import LaurentPoly, lp_bar, serialize_laurent
from algebra.errors import NegativeInput, ZeroBase
from algebra.qcomb import qbinom, qfact, qint, qint_base


class TestEnterosCuanticos:

    def test_valores(self):
        assert qint(0).is_zero()
        assert qint(1) == 1
        assert serialize_laurent(qint(3)) == "q^-2 + 1 + q^2"
        assert qint(-3) == -qint(3)

    def test_con_base(self):
        assert qint_base(2, 2) == LaurentPoly({(-2, 0): 1, (2, 0): 1})
        assert qint_base(3, -1) == qint(3)
        with pytest.raises(ZeroBase):
            qint_base(3, 0)

    @given(st.integers(-15, 15))
    def test_invariante_por_barra(self, n):
        assert lp_bar(qint(n)) == qint(n)


class TestFactorialesYBinomiales:

    def test_factorial(self):
        assert qfact(0) == 1
        assert qfact(3) == qint(2) * qint(3)
        assert serialize_laurent(qfact(3)) == "q^-3 + 2*q^-1 + 2*q + q^3"
        with pytest.raises(NegativeInput):
            qfact(-1)

    def test_binomial(self):
        assert serialize_laurent(qbinom(4, 2)) == "q^-4 + q^-2 + 2 + q^2 + q^4"
        assert qbinom(5, 1) == qint(5)
        assert qbinom(3, 4).is_zero()
        assert qbinom(3, -1).is_zero()
        with pytest.raises(NegativeInput):
            qbinom(-1, 0)

    @given(st.integers(0, 14).flatmap(lambda m: st.tuples(st.just(m), st.integers(0, m))))
    def test_binomial_propiedades(self, par):
        m, n = par
        assert qbinom(m, n) == qbinom(m, m - n)
        assert qbinom(m, n).evaluate_at_one() == comb(m, n)
        assert lp_bar(qbinom(m, n)) == qbinom(m, n)
        # [m]! = [m, n] [n]! [m-n]!
        assert qfact(m) == qbinom(m, n) * qfact(n) * qfact(m - n)
