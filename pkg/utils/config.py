"""
Configuración por variables de entorno y cotas por defecto de las suites
Autor: cmsr92
"""

import os

from algebra.coeff import VarsigmaMode
from algebra.errors import ResourceLimit

# Cotas por defecto (generic, specialized)
COTAS_POR_DEFECTO = {
    'qidentities': (20, 20),
    'pbw-core': (12, 12),
    'mult-even': (12, 16),
    'mult-odd': (12, 16),
    'comult-even': (6, 8),
    'comult-odd': (6, 8),
    'fhy-forms': (6, 6),
    'proof-recurrences': (8, 8),
    'chi': (10, 10),
    'positivity': (16, 16),
}


def get_max_n():
    return int(os.getenv('IDP_MAX_N', '24'))


def get_workers():
    return max(1, int(os.getenv('IDP_WORKERS', '1')))


def get_seed():
    return int(os.getenv('IDP_SEED', '20231'))


def cota_por_defecto(suite, modo=VarsigmaMode.GENERIC):
    generic, specialized = COTAS_POR_DEFECTO[suite]
    return generic if VarsigmaMode(modo) is VarsigmaMode.GENERIC else specialized


def verificar_cota(cota):
    """Lanza ResourceLimit si la cota supera IDP_MAX_N"""
    techo = get_max_n()
    if cota > techo:
        raise ResourceLimit(f"la cota {cota} supera el techo IDP_MAX_N={techo}")
    return cota
