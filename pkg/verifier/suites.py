"""
Suites de verificación por lotes
Cada suite genera una lista de casos (nombre, kwargs) que se evalúan en serie o en un
Pool de procesos; el orden de los resultados es el de los casos.
Autor: cmsr92
"""

import logging
import time
from multiprocessing import Pool
from typing import Any, Dict, List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from algebra.coeff import (
    ONE,
    Q,
    Scalar,
    VarsigmaMode,
    lp_bar,
    lp_test_nonneg,
    q_varsigma,
    sc_to_laurent,
    serialize_laurent,
    serialize_scalar,
)
from algebra.errors import IQuantumError, NegativeInput, NotIntegral, UnknownSuite
from algebra.idp import (
    Parity,
    comult_assemble,
    comult_closed,
    comult_direct,
    comult_recurrence,
    idp_closed,
    idp_pbw,
    idp_recursive,
    mult_closed,
    mult_direct,
    s_component,
    s_component_fhy,
    serialize_basis,
)
from algebra.pbw import (
    u_chi,
    u_divided_power,
    u_echeck,
    u_from_monomial,
    u_gen,
    u_h,
    u_h_binom,
    u_k_power,
    u_mul,
    u_one,
    u_specialize_varsigma,
    u_weight_eval,
    u_zero,
)
from algebra.qcomb import qbinom, qbinom_sc, qfact, qfact_sc, qint
from algebra.tensor import (
    delta,
    delta_gen,
    delta_left,
    delta_right,
    serialize_tensor,
    t_add,
    t_chi,
    t_from_pair,
    t_mul,
    t_one,
)
from utils.config import cota_por_defecto, get_seed, get_workers, verificar_cota
from verifier import identities

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Modelos del reporte
# ---------------------------------------------------------------------------

class CheckResult(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    id: str
    params: Dict[str, Any]
    passed: bool = Field(alias='pass')
    witness: Optional[str] = None


class Observation(BaseModel):
    id: str
    params: Dict[str, Any]
    profile: Dict[str, int]


class SuiteReport(BaseModel):
    suite: str
    parameters: Dict[str, Any]
    checks: List[CheckResult]
    observations: List[Observation] = Field(default_factory=list)
    wall_time_s: float

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    @property
    def n_failed(self):
        return sum(1 for c in self.checks if not c.passed)

    def to_json(self, include_time=True):
        exclude = None if include_time else {'wall_time_s'}
        return self.model_dump_json(by_alias=True, exclude_none=True, exclude=exclude, indent=2)


# ---------------------------------------------------------------------------
# Utilidades de comparación
# ---------------------------------------------------------------------------

def _check(identidad, params, ok, witness=None):
    return ('check', identidad, params, bool(ok), None if ok else witness)


def _check_cero(identidad, params, diferencia, serializar=str):
    """La identidad vale si la diferencia es cero; si no, la diferencia es el testigo"""
    ok = diferencia.is_zero()
    return _check(identidad, params, ok, None if ok else serializar(diferencia))


def _check_igual(identidad, params, x, y, serializar=str):
    return _check_cero(identidad, params, x - y, serializar)


def _mapas_iguales(a, b):
    claves = set(a) | set(b)
    return all(a.get(d, Scalar(0)) == b.get(d, Scalar(0)) for d in claves)


def _elemento(terminos):
    """UElement desde ((a, b, c, coef, e_q, e_v), ...)"""
    total = u_zero()
    for a, b, c, coef, e_q, e_v in terminos:
        total = total + u_from_monomial(a, b, c, Scalar.monomial(e_q, e_v, coef))
    return total


def _muestras(rng, cantidad, tamano, con_varsigma):
    """Especificaciones aleatorias de elementos pequeños, deterministas por semilla"""
    muestras = []
    for _ in range(cantidad):
        muestra = []
        for _ in range(tamano):
            muestra.append((
                int(rng.integers(0, 3)),
                int(rng.integers(-2, 3)),
                int(rng.integers(0, 3)),
                int(rng.choice([-2, -1, 1, 2, 3])),
                int(rng.integers(-2, 3)),
                int(rng.integers(0, 2)) if con_varsigma else 0,
            ))
        muestras.append(tuple(muestra))
    return muestras


def _palabras(rng, cantidad, largo):
    generadores = ['E', 'F', 'K', 'Kinv']
    return [tuple(str(rng.choice(generadores)) for _ in range(largo)) for _ in range(cantidad)]


# ---------------------------------------------------------------------------
# Casos: qidentities
# ---------------------------------------------------------------------------

def caso_eq1_eq2(n, cota):
    resultados = []
    for m in range(-cota, cota + 1):
        if m != 0:
            resultados.append(_check_cero('eq1', {'n': n, 'm': m}, identities.eq1(n, m), serialize_laurent))
        resultados.append(_check_cero('eq2', {'n': n, 'm': m}, identities.eq2(n, m), serialize_laurent))
    resultados.append(_check_cero('eq4', {'n': n}, identities.eq4(n), serialize_laurent))
    return resultados


def caso_eq3(m, cota):
    resultados = []
    for n in range(-cota, cota + 1):
        for l in range(-cota, cota + 1):
            resultados.append(_check_cero('eq3', {'m': m, 'n': n, 'l': l},
                                          identities.eq3(m, n, l), serialize_laurent))
    return resultados


def caso_eq5(l, cota):
    resultados = []
    for k in range(cota + 1):
        for a in range(cota + 1):
            resultados.append(_check_cero('eq5', {'l': l, 'k': k, 'a': a},
                                          identities.eq5(l, k, a), serialize_laurent))
    return resultados


def caso_qbinom(m):
    resultados = []
    for n in range(m + 1):
        params = {'m': m, 'n': n}
        resultados.append(_check_cero('qbinom-symmetry', params, identities.qbinom_simetria(m, n),
                                      serialize_laurent))
        diferencia = identities.qbinom_en_uno(m, n)
        resultados.append(_check('qbinom-classical', params, diferencia == 0, str(diferencia)))
        b = qbinom(m, n)
        resultados.append(_check_igual('qbinom-bar', params, lp_bar(b), b, serialize_laurent))
    resultados.append(_check_igual('qint-bar', {'n': m}, lp_bar(qint(m)), qint(m), serialize_laurent))
    resultados.append(_check_igual('qfact-bar', {'n': m}, lp_bar(qfact(m)), qfact(m), serialize_laurent))
    return resultados


def caso_k_identities(n):
    resultados = []
    for r in range(1, n + 1):
        for c in range(r // 2 + 1):
            for a in range(r - 2 * c + 1):
                diferencia = identities.k_identity(n, r, c, a)
                resultados.append(_check_cero('k-identity', {'n': n, 'r': r, 'c': c, 'a': a}, diferencia))
    return resultados


def _casos_qidentities(cota, modo, rng):
    casos = [('caso_eq1_eq2', {'n': n, 'cota': cota}) for n in range(-cota, cota + 1)]
    c3 = min(cota, 12)
    casos += [('caso_eq3', {'m': m, 'cota': c3}) for m in range(-c3, c3 + 1)]
    c5 = min(cota, 8)
    casos += [('caso_eq5', {'l': l, 'cota': c5}) for l in range(c5 + 1)]
    casos += [('caso_qbinom', {'m': m}) for m in range(cota + 1)]
    ck = min(cota, 12)
    casos += [('caso_k_identities', {'n': n}) for n in range(2, ck + 2) if 2 * (n // 2) <= ck]
    return casos


# ---------------------------------------------------------------------------
# Casos: pbw-core
# ---------------------------------------------------------------------------

def caso_relaciones(modo):
    modo = VarsigmaMode(modo)
    E, F, K, Kinv = (u_gen(g) for g in ('E', 'F', 'K', 'Kinv'))
    echeck = u_echeck(modo)
    q_menos_qinv = Q - Q ** -1
    resultados = [
        _check_igual('k-kinv', {}, u_mul(K, Kinv), u_one()),
        _check_igual('fe-commutator', {}, u_mul(F, E),
                     u_mul(E, F) - (K - Kinv).scale(ONE / q_menos_qinv)),
        _check_igual('kinv-f', {}, u_mul(Kinv, F), u_mul(F, Kinv).scale(Q ** 2)),
        _check_igual('f-echeck', {'modo': modo.value},
                     u_mul(F, echeck) - u_mul(echeck, F).scale(Q ** -2),
                     u_h().scale(q_varsigma(modo))),
    ]
    for a in range(-4, 5):
        for n in range(5):
            params = {'a': a, 'n': n, 'modo': modo.value}
            resultados.append(_check_igual('hbinom-f', params, u_mul(u_h_binom(a, n), F),
                                           u_mul(F, u_h_binom(a + 1, n))))
            resultados.append(_check_igual('hbinom-echeck', params, u_mul(u_h_binom(a, n), echeck),
                                           u_mul(echeck, u_h_binom(a - 1, n))))
    for n in range(5):
        esperado = u_mul(u_divided_power('E', n), u_k_power(-n))
        factor = (u_echeck(modo).coefficient(1, -1, 0) ** n).times_monomial(-n * (n - 1))
        resultados.append(_check_igual('echeck-divided', {'n': n, 'modo': modo.value},
                                       u_divided_power('Echeck', n, modo), esperado.scale(factor)))
    return resultados


def caso_divided_mult(total):
    resultados = []
    for m in range(total + 1):
        n = total - m
        for g in ('E', 'F'):
            lhs = u_mul(u_divided_power(g, m), u_divided_power(g, n))
            rhs = u_divided_power(g, m + n).scale(qbinom_sc(m + n, n))
            resultados.append(_check_igual('divided-mult', {'g': g, 'm': m, 'n': n}, lhs, rhs))
    return resultados


def caso_asociatividad(indice, muestra):
    x, y, z = (_elemento(s) for s in muestra)
    return [_check_igual('associativity', {'sample': indice},
                         u_mul(u_mul(x, y), z), u_mul(x, u_mul(y, z)))]


def caso_confluencia(indice, palabra):
    izquierda = u_one()
    for g in palabra:
        izquierda = u_mul(izquierda, u_gen(g))
    derecha = u_one()
    for g in reversed(palabra):
        derecha = u_mul(u_gen(g), derecha)
    return [_check_igual('confluence', {'sample': indice, 'word': ''.join(palabra)}, izquierda, derecha)]


def caso_homomorfismo(indice, muestra):
    x, y = (_elemento(s) for s in muestra)
    return [_check_igual('delta-homomorphism', {'sample': indice},
                         delta(u_mul(x, y)), t_mul(delta(x), delta(y)), serialize_tensor)]


def caso_delta_basico(modo):
    modo = VarsigmaMode(modo)
    resultados = []
    for g in ('E', 'F', 'K', 'Kinv'):
        t = delta_gen(g)
        izquierda, derecha = delta_left(t), delta_right(t)
        resultados.append(_check('coassociativity', {'g': g}, izquierda == derecha,
                                 f"{izquierda} != {derecha}"))
    b = u_gen('F') + u_echeck(modo)
    esperado = t_add(t_from_pair(b, u_gen('Kinv')), t_from_pair(u_one(), b))
    resultados.append(_check_igual('delta-B', {'modo': modo.value}, delta(b), esperado, serialize_tensor))
    resultados.append(_check_igual('delta-one', {}, delta(u_one()), t_one(), serialize_tensor))
    return resultados


def caso_comf(n):
    esperado = None
    for a in range(n + 1):
        derecha = u_mul(u_divided_power('F', n - a), u_k_power(-a))
        sumando = t_from_pair(u_divided_power('F', a), derecha).scale(Scalar.monomial(a * (n - a)))
        esperado = sumando if esperado is None else t_add(esperado, sumando)
    return [_check_igual('coproduct-divided', {'n': n}, delta(u_divided_power('F', n)), esperado,
                         serialize_tensor)]


def _casos_pbw_core(cota, modo, rng):
    con_varsigma = modo is VarsigmaMode.GENERIC
    casos = [('caso_relaciones', {'modo': modo.value}), ('caso_delta_basico', {'modo': modo.value})]
    casos += [('caso_divided_mult', {'total': t}) for t in range(cota + 1)]
    casos += [('caso_comf', {'n': n}) for n in range(cota + 1)]
    for i, m in enumerate(zip(*[iter(_muestras(rng, 3 * 8, 2, con_varsigma))] * 3)):
        casos.append(('caso_asociatividad', {'indice': i, 'muestra': m}))
    for i, w in enumerate(_palabras(rng, 8, 5)):
        casos.append(('caso_confluencia', {'indice': i, 'palabra': w}))
    for i, m in enumerate(zip(*[iter(_muestras(rng, 2 * 6, 2, con_varsigma))] * 2)):
        casos.append(('caso_homomorfismo', {'indice': i, 'muestra': m}))
    return casos


# ---------------------------------------------------------------------------
# Casos: multiplicación
# ---------------------------------------------------------------------------

def caso_oraculo(p, n, modo):
    return [_check_igual('idp-oracle', {'p': p, 'n': n}, idp_recursive(p, n, modo), idp_closed(p, n, modo))]


def caso_mult(p, m, n, modo):
    params = {'p': p, 'm': m, 'n': n}
    cerrado = mult_closed(p, m, n, modo)
    directo = mult_direct(p, m, n, modo)
    resultados = [_check('mult-theorem', params, _mapas_iguales(cerrado, directo),
                         f"closed={serialize_basis(cerrado)} direct={serialize_basis(directo)}")]
    if m < n:
        simetrico = mult_closed(p, n, m, modo)
        resultados.append(_check('mult-symmetry', params, _mapas_iguales(cerrado, simetrico),
                                 f"{serialize_basis(cerrado)} != {serialize_basis(simetrico)}"))
    return resultados


def caso_mult_pbw(p, m, n, modo):
    """El mismo producto repetido sobre las imágenes PBW"""
    modo = VarsigmaMode(modo)
    lhs = u_mul(idp_pbw(Parity(p), m, modo), idp_pbw(Parity(p), n, modo))
    rhs = u_zero()
    for d, c in mult_closed(p, m, n, modo).items():
        rhs = rhs + idp_pbw(Parity(p), d, modo).scale(c)
    return [_check_igual('mult-pbw', {'p': p, 'm': m, 'n': n}, lhs, rhs)]


def _casos_mult(p):
    def generar(cota, modo, rng):
        casos = [('caso_oraculo', {'p': p, 'n': n, 'modo': modo.value}) for n in range(cota + 1)]
        for m in range(cota + 1):
            for n in range(cota - m + 1):
                casos.append(('caso_mult', {'p': p, 'm': m, 'n': n, 'modo': modo.value}))
        for m in range(min(cota, 4) + 1):
            for n in range(min(cota, 4) - m + 1):
                casos.append(('caso_mult_pbw', {'p': p, 'm': m, 'n': n, 'modo': modo.value}))
        return casos
    return generar


# ---------------------------------------------------------------------------
# Casos: comultiplicación
# ---------------------------------------------------------------------------

def caso_comult(p, n, modo):
    modo = VarsigmaMode(modo)
    teorema = comult_assemble(p, n, comult_closed(p, n, modo), modo)
    directo = comult_direct(p, n, modo)
    return [_check_igual('comult-theorem', {'p': p, 'n': n}, teorema, directo, serialize_tensor)]


def caso_fhy(p, n, modo):
    modo = VarsigmaMode(modo)
    resultados = []
    for r in range(n + 1):
        resultados.append(_check_igual('fhy-form', {'p': p, 'n': n, 'r': r},
                                       s_component_fhy(Parity(p), n, r, modo),
                                       s_component(Parity(p), n, r, modo)))
    return resultados


def caso_recurrencia(p, n, modo):
    resultados = []
    for r in range(n + 1):
        lhs, rhs = comult_recurrence(p, n, r, modo)
        resultados.append(_check_igual('comult-recurrence', {'p': p, 'n': n, 'r': r}, lhs, rhs))
    return resultados


def _casos_comult(p):
    def generar(cota, modo, rng):
        return [('caso_comult', {'p': p, 'n': n, 'modo': modo.value}) for n in range(cota + 1)]
    return generar


def _casos_fhy(cota, modo, rng):
    return [('caso_fhy', {'p': p.value, 'n': n, 'modo': modo.value})
            for p in Parity for n in range(cota + 1)]


def _casos_recurrencias(cota, modo, rng):
    return [('caso_recurrencia', {'p': p.value, 'n': n, 'modo': modo.value})
            for p in Parity for n in range(1, cota + 1)]


# ---------------------------------------------------------------------------
# Casos: χ
# ---------------------------------------------------------------------------

def caso_chi_formulas():
    h = u_h()
    resultados = [
        _check_igual('chi-h', {}, u_chi(h), h.scale(-(Q ** 2))),
        _check_igual('chi-echeck', {}, u_chi(u_from_monomial(1, -1, 0, Q ** -1)),
                     u_from_monomial(1, -1, 0, Q ** -1)),
    ]
    for a in range(-4, 5):
        for n in range(5):
            signo = -1 if n % 2 else 1
            esperado = u_h_binom(1 - a - n, n).scale(Scalar.monomial(2 * n * (n + 1)) * signo)
            resultados.append(_check_igual('chi-hbinom', {'a': a, 'n': n}, u_chi(u_h_binom(a, n)), esperado))
    for g in ('E', 'F', 'K', 'Kinv'):
        x = u_gen(g)
        resultados.append(_check_igual('chi-delta', {'g': g}, t_chi(delta(u_chi(x))), delta(x), serialize_tensor))
    return resultados


def caso_chi_muestra(indice, muestra):
    x, y = (_elemento(s) for s in muestra)
    params = {'sample': indice}
    return [
        _check_igual('chi-involution', params, u_chi(u_chi(x)), x),
        _check_igual('chi-anti', params, u_chi(u_mul(x, y)), u_mul(u_chi(y), u_chi(x))),
        _check_igual('chi-delta', params, t_chi(delta(u_chi(x))), delta(x), serialize_tensor),
    ]


def caso_chi_idp(p, n, modo):
    modo = VarsigmaMode(modo)
    if modo is VarsigmaMode.GENERIC:
        x = u_specialize_varsigma(idp_pbw(Parity(p), n, modo))
    else:
        x = idp_pbw(Parity(p), n, modo)
    resultados = [_check_igual('chi-idp', {'p': p, 'n': n}, u_chi(x), x)]
    if modo is VarsigmaMode.GENERIC and n <= 6:
        resultados.append(_check_igual('specialize-consistency', {'p': p, 'n': n},
                                       x, idp_pbw(Parity(p), n, VarsigmaMode.SPECIALIZED)))
    return resultados


def _casos_chi(cota, modo, rng):
    casos = [('caso_chi_formulas', {})]
    for i, m in enumerate(zip(*[iter(_muestras(rng, 2 * 8, 2, False))] * 2)):
        casos.append(('caso_chi_muestra', {'indice': i, 'muestra': m}))
    casos += [('caso_chi_idp', {'p': p.value, 'n': n, 'modo': modo.value})
              for p in Parity for n in range(cota + 1)]
    return casos


# ---------------------------------------------------------------------------
# Casos: positividad
# ---------------------------------------------------------------------------

def weight_profile(S, m):
    """
    Clasifica cada coeficiente de u_weight_eval(S, m), reescalado por [a]![c]!,
    en positive, negative, mixed o non-integral.
    """
    perfil = {'positive': 0, 'negative': 0, 'mixed': 0, 'non-integral': 0}
    for (a, _, c), s in u_weight_eval(S, m).terms.items():
        try:
            laurent = sc_to_laurent(s * qfact_sc(a) * qfact_sc(c))
        except NotIntegral:
            perfil['non-integral'] += 1
            continue
        coeficientes = list(laurent.terms.values())
        if all(x >= 0 for x in coeficientes):
            perfil['positive'] += 1
        elif all(x <= 0 for x in coeficientes):
            perfil['negative'] += 1
        else:
            perfil['mixed'] += 1
    return perfil


def caso_positividad(p, m, n):
    resultados = []
    for d, s in sorted(mult_closed(p, m, n, VarsigmaMode.SPECIALIZED).items()):
        params = {'p': p, 'm': m, 'n': n, 'd': d}
        try:
            laurent = sc_to_laurent(s)
        except NotIntegral:
            resultados.append(_check('integral', params, False, serialize_scalar(s)))
            continue
        resultados.append(_check('integral', params, True))
        resultados.append(_check('positive', params, lp_test_nonneg(laurent), serialize_laurent(laurent)))
    return resultados


def caso_perfil_peso(p, n):
    observaciones = []
    for r in range(n + 1):
        S = s_component(Parity(p), n, r, VarsigmaMode.SPECIALIZED)
        for m in range(-6, 7):
            if (m - n) % 2:
                continue
            observaciones.append(('obs', 'weight-profile', {'p': p, 'n': n, 'r': r, 'm': m},
                                  weight_profile(S, m)))
    return observaciones


def _casos_positividad(cota, modo, rng):
    casos = []
    for p in Parity:
        for m in range(cota + 1):
            for n in range(cota - m + 1):
                casos.append(('caso_positividad', {'p': p.value, 'm': m, 'n': n}))
    casos += [('caso_perfil_peso', {'p': p.value, 'n': n}) for p in Parity for n in range(min(cota, 6) + 1)]
    return casos


# ---------------------------------------------------------------------------
# Registro y ejecución
# ---------------------------------------------------------------------------

_CASOS = {
    nombre: funcion for nombre, funcion in globals().items()
    if nombre.startswith('caso_') and callable(funcion)
}

SUITES = {
    'qidentities': _casos_qidentities,
    'pbw-core': _casos_pbw_core,
    'mult-even': _casos_mult(Parity.EV.value),
    'mult-odd': _casos_mult(Parity.ODD.value),
    'comult-even': _casos_comult(Parity.EV.value),
    'comult-odd': _casos_comult(Parity.ODD.value),
    'fhy-forms': _casos_fhy,
    'proof-recurrences': _casos_recurrencias,
    'chi': _casos_chi,
    'positivity': _casos_positividad,
}


def _ejecutar(caso):
    nombre, kwargs = caso
    try:
        return _CASOS[nombre](**kwargs)
    except (IQuantumError, ZeroDivisionError) as e:
        # el error queda como check fallido con el caso completo como testigo
        return [_check(nombre, {k: v for k, v in kwargs.items() if k != 'muestra'}, False,
                       f"{type(e).__name__}: {e}")]


def run_suite(name, bound=None, varsigma_mode=VarsigmaMode.GENERIC, workers=None):
    """Ejecuta una suite hasta la cota y arma el SuiteReport"""
    if name not in SUITES:
        raise UnknownSuite(f"Suite desconocida: {name}. Opciones: {', '.join(SUITES)}")
    modo = VarsigmaMode(varsigma_mode)
    if bound is None:
        bound = cota_por_defecto(name, modo)
    if bound < 1:
        raise NegativeInput(f"la cota debe ser >= 1, se recibió {bound}")
    verificar_cota(bound)
    workers = workers or get_workers()

    rng = np.random.default_rng(get_seed())
    casos = SUITES[name](bound, modo, rng)
    logger.info("Suite %s: %s casos, cota %s, modo %s, %s procesos", name, len(casos), bound, modo.value, workers)

    inicio = time.perf_counter()
    if workers > 1:
        with Pool(workers) as pool:
            resultados = pool.map(_ejecutar, casos)
    else:
        resultados = [_ejecutar(caso) for caso in casos]
    duracion = time.perf_counter() - inicio

    checks, observaciones = [], []
    for lote in resultados:
        for item in lote:
            if item[0] == 'check':
                _, identidad, params, ok, witness = item
                checks.append(CheckResult(id=identidad, params=params, passed=ok, witness=witness))
            else:
                _, identidad, params, perfil = item
                observaciones.append(Observation(id=identidad, params=params, profile=perfil))

    reporte = SuiteReport(
        suite=name,
        parameters={'bound': bound, 'varsigma': modo.value, 'seed': get_seed()},
        checks=checks,
        observations=observaciones,
        wall_time_s=round(duracion, 3),
    )
    if reporte.passed:
        logger.info("Suite %s: %s checks correctos en %.2fs", name, len(checks), duracion)
    else:
        logger.warning("Suite %s: %s de %s checks fallan", name, reporte.n_failed, len(checks))
    return reporte


def run_all(bound=None, varsigma_mode=VarsigmaMode.GENERIC, workers=None):
    return [run_suite(nombre, bound, varsigma_mode, workers) for nombre in SUITES]
