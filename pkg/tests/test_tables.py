import json

import pandas as pd
import pytest

from algebra.coeff import ONE, Scalar
from algebra.errors import ResourceLimit
from algebra.qcomb import qint_sc
from verifier.tables import COLUMNAS, clasificar_constante, constant_table, emit_table


class TestTablaDeConstantes:

    def test_columnas_y_orden(self):
        df = constant_table('ev', 2)
        assert list(df.columns) == COLUMNAS
        assert len(df) == 6
        assert df[['m', 'n']].values.tolist() == [[0, 0], [0, 1], [0, 2], [1, 0], [1, 1], [2, 0]]

    def test_fila_b_por_b(self):
        df = constant_table('ev', 2)
        fila = df[(df.m == 1) & (df.n == 1)].iloc[0]
        assert fila['l'] == 0
        assert fila['coefficient'] == "q^-1 + q"
        assert bool(fila['integral']) and bool(fila['positive'])

    def test_familia_impar(self):
        df = constant_table('odd', 2)
        filas = df[(df.m == 1) & (df.n == 1)]
        assert filas['l'].tolist() == [0, 1]
        assert filas['coefficient'].tolist() == ["q^-1 + q", "q*v"]

    def test_correccion_en_grado_tres(self):
        df = constant_table('ev', 3)
        fila = df[(df.m == 2) & (df.n == 1) & (df.l == 1)].iloc[0]
        assert fila['coefficient'] == "v + q^2*v"

    def test_cota_negativa_y_techo(self, entorno_limpio):
        with pytest.raises(ValueError):
            constant_table('ev', -1)
        entorno_limpio.setenv('IDP_MAX_N', '4')
        with pytest.raises(ResourceLimit):
            constant_table('ev', 5)

    def test_clasificacion(self):
        assert clasificar_constante(qint_sc(3)) == (True, True)
        assert clasificar_constante(ONE / qint_sc(2)) == (False, False)
        assert clasificar_constante(Scalar.monomial(0, 0, -1)) == (True, False)


class TestEmision:

    def test_csv(self):
        texto = emit_table('odd', 0, 'csv')
        assert texto == "family,m,n,l,coefficient,integral,positive\nodd,0,0,0,1,True,True\n"

    def test_json(self):
        registros = json.loads(emit_table('ev', 2, 'json'))
        assert len(registros) == 6
        assert {'family': 'ev', 'm': 1, 'n': 1, 'l': 0, 'coefficient': 'q^-1 + q',
                'integral': True, 'positive': True} in registros

    def test_determinista(self):
        assert emit_table('odd', 4, 'csv') == emit_table('odd', 4, 'csv')

    def test_escribe_archivo(self, tmp_path):
        destino = tmp_path / 'tabla.csv'
        texto = emit_table('ev', 3, 'csv', out=destino)
        assert destino.read_text(encoding='utf-8') == texto

    def test_xlsx(self, tmp_path):
        destino = tmp_path / 'tabla.xlsx'
        emit_table('odd', 3, 'xlsx', out=destino)
        df = pd.read_excel(destino, sheet_name='Constantes', engine='openpyxl')
        assert list(df.columns) == COLUMNAS
        assert len(df) == len(constant_table('odd', 3))

    def test_formatos_invalidos(self):
        with pytest.raises(ValueError):
            emit_table('ev', 2, 'parquet')
        with pytest.raises(ValueError):
            emit_table('ev', 2, 'xlsx')
