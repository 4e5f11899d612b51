import pytest

from verifier import identities


class TestIdentidadesEscalares:

    @pytest.mark.parametrize('n', range(-6, 7))
    def test_eq1_eq2(self, n):
        for m in range(-6, 7):
            if m:
                assert identities.eq1(n, m).is_zero()
            assert identities.eq2(n, m).is_zero()

    def test_eq3(self):
        for m in range(-4, 5):
            for n in range(-4, 5):
                for l in range(-4, 5):
                    assert identities.eq3(m, n, l).is_zero()

    @pytest.mark.parametrize('n', range(-5, 9))
    def test_eq4(self, n):
        assert identities.eq4(n).is_zero()

    def test_eq5(self):
        for l in range(5):
            for k in range(5):
                for a in range(5):
                    assert identities.eq5(l, k, a).is_zero(), (l, k, a)

    def test_binomiales(self):
        for m in range(10):
            for n in range(m + 1):
                assert identities.qbinom_simetria(m, n).is_zero()
                assert identities.qbinom_en_uno(m, n) == 0

    def test_diferencia_no_nula(self):
        # una diferencia desplazada ya no se anula
        assert not (identities.eq1(2, 1) + 1).is_zero()


class TestIdentidadesEnK:

    @pytest.mark.parametrize('n', range(2, 9))
    def test_todas_las_paridades(self, n):
        for r in range(1, n + 1):
            for c in range(r // 2 + 1):
                for a in range(r - 2 * c + 1):
                    assert identities.k_identity(n, r, c, a).is_zero(), (n, r, c, a)

    def test_caso_par_chico(self):
        # n = 4, r = 2, c = 0, a = 1
        assert identities.k_identity_even_r(2, 2, 0, 1).is_zero()
        assert identities.k_identity_odd_r(2, 3, 1, 0).is_zero()
