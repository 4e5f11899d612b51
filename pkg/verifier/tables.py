"""
Tablas de constantes de estructura de la multiplicación
Autor: cmsr92
"""

import io
import logging

import pandas as pd

from algebra.coeff import VarsigmaMode, lp_test_nonneg, sc_specialize_varsigma, sc_to_laurent, serialize_scalar
from algebra.errors import DenominatorVanishes, NotIntegral
from algebra.idp import Parity, mult_closed
from utils.config import verificar_cota

logger = logging.getLogger(__name__)

COLUMNAS = ['family', 'm', 'n', 'l', 'coefficient', 'integral', 'positive']
FORMATOS = ('csv', 'json', 'xlsx')


def clasificar_constante(s):
    """(integral, positive) de una constante tras especializar ς = q⁻¹"""
    try:
        laurent = sc_to_laurent(sc_specialize_varsigma(s))
    except (NotIntegral, DenominatorVanishes):
        return False, False
    return True, lp_test_nonneg(laurent)


def constant_table(family, max_total_degree, modo=VarsigmaMode.GENERIC):
    """
    DataFrame con una fila por coeficiente no nulo de mult_closed(family, m, n),
    m + n <= max_total_degree, ordenado por (m, n, l).
    l es el índice del sumando: el grado de B es m + n - 2l.
    """
    if max_total_degree < 0:
        raise ValueError("max_total_degree debe ser >= 0")
    verificar_cota(max_total_degree)
    family = Parity(family)
    filas = []
    for m in range(max_total_degree + 1):
        for n in range(max_total_degree - m + 1):
            coeficientes = mult_closed(family, m, n, modo)
            for grado in sorted(coeficientes, reverse=True):
                s = coeficientes[grado]
                integral, positivo = clasificar_constante(s)
                filas.append({
                    'family': family.value,
                    'm': m,
                    'n': n,
                    # grados con paridad distinta de m+n no aparecen en las fórmulas
                    'l': (m + n - grado) // 2,
                    'coefficient': serialize_scalar(s),
                    'integral': integral,
                    'positive': positivo,
                })
    logger.info("Tabla %s hasta grado %s: %s filas", family.value, max_total_degree, len(filas))
    df = pd.DataFrame(filas, columns=COLUMNAS)
    return df.sort_values(['m', 'n', 'l'], kind='stable').reset_index(drop=True)


def emit_table(family, max_total_degree, format='csv', modo=VarsigmaMode.GENERIC, out=None):
    """
    Serializa la tabla. csv y json devuelven texto (y lo escriben en out si se da);
    xlsx exige out y devuelve la ruta.
    """
    if format not in FORMATOS:
        raise ValueError(f"Formato desconocido: {format}")
    df = constant_table(family, max_total_degree, modo)

    if format == 'xlsx':
        if out is None:
            raise ValueError("xlsx requiere una ruta de salida")
        with pd.ExcelWriter(out, engine='openpyxl') as writer:
            df.to_excel(writer, sheet_name='Constantes', index=False)
        return out

    if format == 'csv':
        buffer = io.StringIO()
        df.to_csv(buffer, index=False, lineterminator='\n')
        texto = buffer.getvalue()
    else:
        texto = df.to_json(orient='records', force_ascii=False, indent=2)

    if out is not None:
        with open(out, 'w', encoding='utf-8') as f:
            f.write(texto)
    return texto
