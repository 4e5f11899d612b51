"""
Ejemplos dorados: productos y coproductos publicados, descritos en JSON y regenerados
desde las fórmulas generales.
Autor: cmsr92
"""

import logging
from pathlib import Path
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field

from algebra.coeff import ONE, Scalar, VarsigmaMode, q_varsigma
from algebra.idp import Parity, comult_direct, idp_pbw, mult_closed, mult_direct, s_component, serialize_basis
from algebra.pbw import u_divided_power, u_h_binom, u_k_power, u_mul, u_one, u_zero
from algebra.qcomb import qbinom_sc, qint_sc
from algebra.tensor import serialize_tensor, t_add, t_from_pair, t_zero
from verifier.suites import CheckResult

logger = logging.getLogger(__name__)

GOLDEN_DIR = Path(__file__).resolve().parent.parent / 'golden'

# (coeficiente de a, constante)
Lineal = Tuple[int, int]


class MultTerm(BaseModel):
    degree: Lineal
    qv: int = 0
    qbinom: Optional[Tuple[Lineal, Lineal]] = None
    num: List[Lineal] = Field(default_factory=list)
    den: List[Lineal] = Field(default_factory=list)


class MultProduct(BaseModel):
    m: int
    n: Lineal
    terms: List[MultTerm]


class MultGolden(BaseModel):
    family: Parity
    description: str = ''
    a_values: List[int]
    products: List[MultProduct]


class Summand(BaseModel):
    q: int
    qv: int = 0
    factors: List[Tuple[str, int]]


class ComultGoldenTerm(BaseModel):
    r: int
    summands: List[Summand]


class Coproduct(BaseModel):
    n: int
    terms: List[ComultGoldenTerm]


class ComultGolden(BaseModel):
    family: Parity
    description: str = ''
    coproducts: List[Coproduct]


def _lineal(par, a):
    return par[0] * a + par[1]


def _escalar_termino(termino, a, modo):
    s = ONE
    if termino.qbinom is not None:
        s = s * qbinom_sc(_lineal(termino.qbinom[0], a), _lineal(termino.qbinom[1], a))
    for x in termino.num:
        s = s * qint_sc(_lineal(x, a))
    for y in termino.den:
        s = s / qint_sc(_lineal(y, a))
    return s * q_varsigma(modo) ** termino.qv


def mult_golden_coefficients(producto, a, modo=VarsigmaMode.GENERIC):
    """Mapeo grado -> Scalar del ejemplo evaluado en a, sin entradas nulas"""
    coeficientes = {}
    for termino in producto.terms:
        d = _lineal(termino.degree, a)
        coeficientes[d] = coeficientes.get(d, Scalar(0)) + _escalar_termino(termino, a, modo)
    return {d: c for d, c in sorted(coeficientes.items()) if not c.is_zero()}


def _factor(nombre, valor, modo):
    if nombre == 'K':
        return u_k_power(valor)
    if nombre == 'h':
        return u_h_binom(valor, 1)
    if nombre in ('Echeck', 'F', 'E'):
        return u_divided_power(nombre, valor, modo)
    raise ValueError(f"Factor desconocido en archivo dorado: {nombre}")


def comult_golden_component(termino, modo=VarsigmaMode.GENERIC):
    """Suma de los productos de factores de un sumando B^{(n-r)} ⊗ (...)"""
    total = u_zero()
    qv = q_varsigma(modo)
    for sumando in termino.summands:
        producto = u_one()
        for nombre, valor in sumando.factors:
            producto = u_mul(producto, _factor(nombre, valor, modo))
        total = total + producto.scale((qv ** sumando.qv).times_monomial(sumando.q))
    return total


def load_golden(path):
    texto = Path(path).read_text(encoding='utf-8')
    if '"coproducts"' in texto:
        return ComultGolden.model_validate_json(texto)
    return MultGolden.model_validate_json(texto)


def _check(identidad, params, esperado, obtenido):
    ok = esperado == obtenido
    return CheckResult(id=identidad, params=params, passed=ok,
                       witness=None if ok else f"esperado={esperado} obtenido={obtenido}")


def verify_mult_golden(golden, modo=VarsigmaMode.GENERIC):
    resultados = []
    p = golden.family
    for producto in golden.products:
        for a in golden.a_values:
            n = _lineal(producto.n, a)
            params = {'p': p.value, 'm': producto.m, 'n': n, 'a': a}
            esperado = serialize_basis(mult_golden_coefficients(producto, a, modo))
            resultados.append(_check('golden-mult-closed', params, esperado,
                                     serialize_basis(mult_closed(p, producto.m, n, modo))))
            resultados.append(_check('golden-mult-direct', params, esperado,
                                     serialize_basis(mult_direct(p, producto.m, n, modo))))
    return resultados


def verify_comult_golden(golden, modo=VarsigmaMode.GENERIC):
    resultados = []
    p = golden.family
    modo = VarsigmaMode(modo)
    for coproducto in golden.coproducts:
        n = coproducto.n
        ensamblado = t_zero()
        for termino in coproducto.terms:
            componente = comult_golden_component(termino, modo)
            params = {'p': p.value, 'n': n, 'r': termino.r}
            resultados.append(_check('golden-comult-component', params, str(componente),
                                     str(s_component(p, n, termino.r, modo))))
            ensamblado = t_add(ensamblado, t_from_pair(idp_pbw(p, n - termino.r, modo), componente))
        resultados.append(_check('golden-comult-direct', {'p': p.value, 'n': n},
                                 serialize_tensor(ensamblado), serialize_tensor(comult_direct(p, n, modo))))
    return resultados


def run_golden(directorio=None, modo=VarsigmaMode.GENERIC):
    """Regenera todos los ejemplos dorados del directorio; devuelve {archivo: [CheckResult]}"""
    directorio = Path(directorio) if directorio else GOLDEN_DIR
    reporte = {}
    for path in sorted(directorio.glob('*.json')):
        golden = load_golden(path)
        if isinstance(golden, ComultGolden):
            reporte[path.name] = verify_comult_golden(golden, modo)
        else:
            reporte[path.name] = verify_mult_golden(golden, modo)
        logger.info("Golden %s: %s checks", path.name, len(reporte[path.name]))
    return reporte
