import pytest
from hypothesis import given, settings

from algebra.coeff import Scalar, VarsigmaMode
from algebra.errors import RequiresSpecialized
from algebra.pbw import u_B, u_chi, u_divided_power, u_gen, u_k_power, u_mul, u_one
from algebra.tensor import (
    delta,
    delta_gen,
    delta_left,
    delta_right,
    serialize_tensor,
    t_add,
    t_chi,
    t_from_pair,
    t_left_component,
    t_mul,
    t_one,
    t_specialize_varsigma,
    t_zero,
)
from estrategias import u_elements

GENERADORES = ['E', 'F', 'K', 'Kinv']


class TestProductoTensorial:

    def test_unidad(self):
        t = delta_gen('E')
        assert t_mul(t_one(), t) == t
        assert t_mul(t, t_one()) == t
        assert t_mul(t, t_zero()).is_zero()

    def test_producto_por_componentes(self):
        E, F = u_gen('E'), u_gen('F')
        lhs = t_mul(t_from_pair(E, F), t_from_pair(F, E))
        assert lhs == t_from_pair(u_mul(E, F), u_mul(F, E))

    def test_componente_izquierda(self):
        t = t_add(t_from_pair(u_gen('F'), u_gen('K')), t_from_pair(u_gen('F'), u_gen('E')))
        assert t_left_component(t, (0, 0, 1)) == u_gen('K') + u_gen('E')
        assert t_left_component(t, (1, 0, 0)).is_zero()


class TestDelta:

    def test_generadores(self):
        assert serialize_tensor(delta_gen('K')) == "K⊗K"
        assert serialize_tensor(delta_gen('E')) == "K⊗E + E⊗1"
        assert serialize_tensor(delta_gen('F')) == "1⊗F + F⊗K^-1"
        with pytest.raises(ValueError):
            delta_gen('B')

    def test_relaciones_se_preservan(self):
        dK, dKinv = delta_gen('K'), delta_gen('Kinv')
        assert t_mul(dK, dKinv) == t_one()
        assert delta(u_one()) == t_one()

    @settings(max_examples=15)
    @given(u_elements(max_terminos=2), u_elements(max_terminos=2))
    def test_homomorfismo(self, x, y):
        assert delta(u_mul(x, y)) == t_mul(delta(x), delta(y))

    @pytest.mark.parametrize('g', GENERADORES)
    def test_coasociativa(self, g):
        t = delta_gen(g)
        assert delta_left(t) == delta_right(t)

    def test_coasociativa_en_producto(self):
        x = u_mul(u_mul(u_gen('E'), u_gen('F')), u_gen('E'))
        assert delta_left(delta(x)) == delta_right(delta(x))

    def test_delta_de_b(self, modo):
        b = u_B(modo)
        esperado = t_add(t_from_pair(b, u_gen('Kinv')), t_from_pair(u_one(), b))
        assert delta(b) == esperado

    @pytest.mark.parametrize('n', [0, 1, 2, 3, 4])
    def test_potencia_dividida_de_f(self, n):
        esperado = t_zero()
        for a in range(n + 1):
            derecha = u_mul(u_divided_power('F', n - a), u_k_power(-a))
            par = t_from_pair(u_divided_power('F', a), derecha).scale(Scalar.monomial(a * (n - a)))
            esperado = t_add(esperado, par)
        assert delta(u_divided_power('F', n)) == esperado


class TestChiTensorial:

    @pytest.mark.parametrize('g', GENERADORES)
    def test_compatible_con_delta(self, g):
        x = u_gen(g)
        assert t_chi(delta(u_chi(x))) == delta(x)

    @settings(max_examples=15)
    @given(u_elements(max_terminos=2))
    def test_compatible_en_muestras(self, x):
        assert t_chi(delta(u_chi(x))) == delta(x)

    def test_requiere_especializar(self):
        t = delta(u_B())
        with pytest.raises(RequiresSpecialized):
            t_chi(t)
        assert t_specialize_varsigma(t) == delta(u_B(VarsigmaMode.SPECIALIZED))
