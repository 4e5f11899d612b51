import json

import pytest
from click.testing import CliRunner

from app import cli


@pytest.fixture
def runner(entorno_limpio):
    return CliRunner()


class TestVerify:

    def test_suite_que_pasa(self, runner, tmp_path):
        destino = tmp_path / 'reporte.json'
        resultado = runner.invoke(cli, ['verify', 'qidentities', '--max', '2', '--json', str(destino)])
        assert resultado.exit_code == 0, resultado.output
        assert '✅' in resultado.output
        datos = json.loads(destino.read_text(encoding='utf-8'))
        assert datos['suite'] == 'qidentities'
        assert datos['parameters']['bound'] == 2
        assert all(c['pass'] for c in datos['checks'])

    def test_q_inverse(self, runner):
        resultado = runner.invoke(cli, ['verify', 'mult-odd', '--max', '3', '--varsigma', 'q-inverse'])
        assert resultado.exit_code == 0, resultado.output

    def test_reportes_pdf_y_excel(self, runner, tmp_path):
        pdf, xlsx = tmp_path / 'r.pdf', tmp_path / 'r.xlsx'
        resultado = runner.invoke(cli, ['verify', 'chi', '--max', '1', '--pdf', str(pdf), '--xlsx', str(xlsx)])
        assert resultado.exit_code == 0, resultado.output
        assert pdf.read_bytes().startswith(b'%PDF')
        assert xlsx.stat().st_size > 0

    def test_suite_desconocida(self, runner):
        resultado = runner.invoke(cli, ['verify', 'nada'])
        assert resultado.exit_code == 2

    def test_cota_invalida(self, runner):
        resultado = runner.invoke(cli, ['verify', 'chi', '--max', '0'])
        assert resultado.exit_code == 2
        assert 'NegativeInput' in resultado.output

    def test_techo(self, runner):
        resultado = runner.invoke(cli, ['verify', 'mult-even', '--max', '30'])
        assert resultado.exit_code == 3


class TestTable:

    def test_csv_a_stdout(self, runner):
        resultado = runner.invoke(cli, ['table', '--family', 'odd', '--max', '0', '--format', 'csv'])
        assert resultado.exit_code == 0
        assert resultado.output == "family,m,n,l,coefficient,integral,positive\nodd,0,0,0,1,True,True\n"

    def test_json_a_archivo(self, runner, tmp_path):
        destino = tmp_path / 'tabla.json'
        resultado = runner.invoke(cli, ['table', '--family', 'ev', '--max', '2', '--format', 'json',
                                        '--out', str(destino)])
        assert resultado.exit_code == 0
        assert len(json.loads(destino.read_text(encoding='utf-8'))) == 6

    def test_xlsx_sin_destino(self, runner):
        resultado = runner.invoke(cli, ['table', '--family', 'ev', '--max', '2', '--format', 'xlsx'])
        assert resultado.exit_code == 2


class TestExpand:

    def test_idp_pbw_cero(self, runner):
        resultado = runner.invoke(cli, ['expand', 'idp', '--family', 'ev', '--n', '0', '--basis', 'pbw'])
        assert resultado.output.strip() == '1'

    def test_idp_b(self, runner):
        resultado = runner.invoke(cli, ['expand', 'idp', '--family', 'odd', '--n', '1'])
        assert resultado.output.strip() == 'B'

    def test_comult_cero(self, runner):
        resultado = runner.invoke(cli, ['expand', 'comult', '--family', 'odd', '--n', '0'])
        assert resultado.output.strip() == '1⊗1'

    def test_formas_coinciden(self, runner):
        salidas = []
        for forma in ('theorem', 'fhy', 'direct'):
            resultado = runner.invoke(cli, ['expand', 'comult', '--family', 'odd', '--n', '3', '--form', forma])
            assert resultado.exit_code == 0
            salidas.append(resultado.output)
        assert salidas[0] == salidas[1] == salidas[2]

    def test_n_negativo(self, runner):
        resultado = runner.invoke(cli, ['expand', 'idp', '--family', 'ev', '--n', '-1'])
        assert resultado.exit_code == 2


class TestGolden:

    def test_todos_pasan(self, runner):
        resultado = runner.invoke(cli, ['golden'])
        assert resultado.exit_code == 0, resultado.output
        assert resultado.output.count('✅') == 4
