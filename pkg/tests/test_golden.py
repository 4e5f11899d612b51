import json

import pytest

from algebra.coeff import VarsigmaMode, q_varsigma
from algebra.idp import Parity, mult_closed
from algebra.qcomb import qint_sc
from verifier.golden import (
    GOLDEN_DIR,
    ComultGolden,
    MultGolden,
    load_golden,
    mult_golden_coefficients,
    run_golden,
)

ARCHIVOS = ['comult_even.json', 'comult_odd.json', 'mult_even.json', 'mult_odd.json']


class TestArchivosDorados:

    def test_esquemas(self):
        assert isinstance(load_golden(GOLDEN_DIR / 'mult_even.json'), MultGolden)
        assert isinstance(load_golden(GOLDEN_DIR / 'comult_odd.json'), ComultGolden)
        assert load_golden(GOLDEN_DIR / 'mult_odd.json').family is Parity.ODD

    @pytest.mark.parametrize('modo', [VarsigmaMode.GENERIC, VarsigmaMode.SPECIALIZED])
    def test_todos_se_regeneran(self, modo):
        reporte = run_golden(modo=modo)
        assert sorted(reporte) == ARCHIVOS
        for archivo, checks in reporte.items():
            assert checks, archivo
            fallos = [(c.id, c.params, c.witness) for c in checks if not c.passed]
            assert not fallos, archivo

    def test_coeficiente_dos_a_al_cuadrado(self):
        # B^(2) B^(2a-1): el término de grado 2a-1 lleva qς[2a]²/[2]
        golden = load_golden(GOLDEN_DIR / 'mult_even.json')
        producto = golden.products[0]
        for a in golden.a_values:
            esperado = q_varsigma() * qint_sc(2 * a) * qint_sc(2 * a) / qint_sc(2)
            assert mult_golden_coefficients(producto, a)[2 * a - 1] == esperado
            assert mult_closed(Parity.EV, 2, 2 * a - 1)[2 * a - 1] == esperado

    def test_detecta_un_ejemplo_alterado(self, tmp_path):
        datos = json.loads((GOLDEN_DIR / 'mult_odd.json').read_text(encoding='utf-8'))
        datos['products'][0]['terms'][0]['qv'] += 1
        (tmp_path / 'alterado.json').write_text(json.dumps(datos), encoding='utf-8')
        reporte = run_golden(tmp_path)
        assert any(not c.passed for c in reporte['alterado.json'])

    def test_directorio_vacio(self, tmp_path):
        assert run_golden(tmp_path) == {}
