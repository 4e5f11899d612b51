"""
ι-potencias divididas B^{(n)} en ambas paridades, su imagen PBW y los lados
derechos cerrados de las fórmulas de multiplicación y comultiplicación.
Autor: cmsr92
"""

import logging
from enum import Enum
from functools import lru_cache
from math import comb
from typing import NamedTuple

from algebra.coeff import ONE, ZERO, Scalar, VarsigmaMode, q_varsigma, serialize_scalar
from algebra.errors import DivisionByZero, NegativeInput
from algebra.pbw import (
    UElement,
    u_add,
    u_B,
    u_divided_power,
    u_echeck,
    u_gen,
    u_h_binom,
    u_k_power,
    u_mul,
    u_one,
    u_zero,
)
from algebra.qcomb import qbinom, qfact_sc, qint, qint_sc
from algebra.tensor import delta, t_add, t_from_pair, t_zero

logger = logging.getLogger(__name__)


class Parity(str, Enum):
    EV = 'ev'
    ODD = 'odd'


class BPolynomial:
    """Polinomio en el símbolo conmutativo B: grado -> Scalar"""

    __slots__ = ('_coeffs',)

    def __init__(self, coeffs=None):
        self._coeffs = {int(d): s for d, s in (coeffs or {}).items() if not s.is_zero()}

    @property
    def coeffs(self):
        return dict(sorted(self._coeffs.items()))

    def degree(self):
        return max(self._coeffs) if self._coeffs else -1

    def coefficient(self, d):
        return self._coeffs.get(d, ZERO)

    def is_zero(self):
        return not self._coeffs

    def scale(self, s):
        return BPolynomial({d: c * s for d, c in self._coeffs.items()})

    def __add__(self, other):
        suma = dict(self._coeffs)
        for d, c in other._coeffs.items():
            suma[d] = suma[d] + c if d in suma else c
        return BPolynomial(suma)

    def __sub__(self, other):
        return self + other.scale(-ONE)

    def __mul__(self, other):
        if not isinstance(other, BPolynomial):
            return self.scale(other)
        producto = {}
        for d1, c1 in self._coeffs.items():
            for d2, c2 in other._coeffs.items():
                d = d1 + d2
                producto[d] = producto[d] + c1 * c2 if d in producto else c1 * c2
        return BPolynomial(producto)

    def __eq__(self, other):
        if not isinstance(other, BPolynomial):
            return NotImplemented
        if self._coeffs.keys() != other._coeffs.keys():
            return False
        return all(c == other._coeffs[d] for d, c in self._coeffs.items())

    def __str__(self):
        return serialize_bpoly(self)


B_GEN = BPolynomial({1: ONE})
B_ONE = BPolynomial({0: ONE})


class ComultTerm(NamedTuple):
    """Sumando B^{(n-r)} ⊗ S_{n,r}"""
    r: int
    right: UElement


def _parity(p):
    return Parity(p)


def _verificar_n(*valores):
    for n in valores:
        if n < 0:
            raise NegativeInput(f"índice negativo: {n}")


def beta(p, j):
    """
    Coeficiente del término de corrección en B·B^{(j)} = [j+1]B^{(j+1)} + qς β(j) B^{(j-1)}:
    [j] si j tiene la paridad de la familia (par para ev, impar para odd), 0 si no.
    """
    objetivo = 0 if _parity(p) is Parity.EV else 1
    return qint_sc(j) if j % 2 == objetivo else ZERO


# ---------------------------------------------------------------------------
# ι-potencias divididas
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def idp_closed(p, n, modo=VarsigmaMode.GENERIC):
    """Forma cerrada como producto de factores (B² - qς[s]²) dividido por [n]!"""
    _verificar_n(n)
    p = _parity(p)
    qv = q_varsigma(modo)
    k = n // 2
    producto = B_GEN if n % 2 else B_ONE
    for j in range(1, k + 1):
        if p is Parity.EV:
            s = 2 * j if n % 2 else 2 * j - 2
        else:
            s = 2 * j - 1
        cuadrado = qint_sc(s) * qint_sc(s)
        producto = producto * BPolynomial({2: ONE, 0: -(qv * cuadrado)})
    return producto.scale(ONE / qfact_sc(n))


@lru_cache(maxsize=None)
def idp_recursive(p, n, modo=VarsigmaMode.GENERIC):
    """Recurrencia de dos términos resuelta hacia adelante desde B^{(0)} = 1"""
    _verificar_n(n)
    qv = q_varsigma(modo)
    anterior, actual = BPolynomial(), B_ONE
    for j in range(n):
        siguiente = B_GEN * actual - anterior.scale(qv * beta(p, j))
        anterior, actual = actual, siguiente.scale(ONE / qint_sc(j + 1))
    return actual


def idp_basis_expand(x, p, modo=VarsigmaMode.GENERIC):
    """Coeficientes c_j con x = sum_j c_j B^{(j)}_p, por sustitución triangular"""
    resto = x
    coeficientes = {}
    while not resto.is_zero():
        d = resto.degree()
        c = resto.coefficient(d) * qfact_sc(d)
        coeficientes[d] = c
        resto = resto - idp_closed(p, d, modo).scale(c)
    return dict(sorted(coeficientes.items()))


# ---------------------------------------------------------------------------
# Fórmulas de multiplicación
# ---------------------------------------------------------------------------

def _cociente(numeradores, denominadores):
    """
    prod [x] / prod [y] sobre argumentos enteros. Los [0] se cancelan por pares;
    sobrantes en el numerador dan 0.
    """
    ceros_num = sum(1 for x in numeradores if x == 0)
    ceros_den = sum(1 for y in denominadores if y == 0)
    if ceros_num > ceros_den:
        return ZERO
    if ceros_num < ceros_den:
        raise DivisionByZero(f"[0] sin cancelar en {denominadores}")
    num = Scalar(1)
    for x in numeradores:
        if x:
            num = num * qint(x)
    den = Scalar(1)
    for y in denominadores:
        if y:
            den = den * qint(y)
    return num / den


def _producto_estandar(k, a, ell, desfase):
    # prod_{m=1}^ell [2a-2m+2][2k-2m+2] / ([2k+2a-2m+desfase][2m])
    nums, dens = [], []
    for m in range(1, ell + 1):
        nums += [2 * a - 2 * m + 2, 2 * k - 2 * m + 2]
        dens += [2 * k + 2 * a - 2 * m + desfase, 2 * m]
    return nums, dens


def _acumular_grado(destino, grado, valor):
    if valor.is_zero():
        return
    destino[grado] = destino[grado] + valor if grado in destino else valor


def _mult_ev(m, n, qv):
    coeficientes = {}
    if m % 2 and n % 2:
        k, a = (m + 1) // 2, (n + 1) // 2
        coef = Scalar(qbinom(2 * k + 2 * a - 2, 2 * k - 1))
        coeficientes[2 * k + 2 * a - 2] = coef
        for ell in range(2, k + 1):
            nums, dens = [], []
            for mm in range(2, ell + 1):
                nums += [2 * a - 2 * mm + 2, 2 * k - 2 * mm + 2]
                dens += [2 * k + 2 * a - 2 * mm + 1, 2 * mm - 2]
            _acumular_grado(coeficientes, 2 * k + 2 * a - 2 * ell,
                            coef * _cociente(nums, dens) * qv ** (ell - 1))
        return coeficientes

    if m % 2 or n % 2:
        if m % 2:
            k, a = (m + 1) // 2, n // 2
            coef = Scalar(qbinom(2 * k + 2 * a - 1, 2 * k - 1))
        else:
            k, a = m // 2, (n + 1) // 2
            coef = Scalar(qbinom(2 * k + 2 * a - 1, 2 * k))
        coeficientes[2 * k + 2 * a - 1] = coef
        for ell in range(1, k + 1):
            nums, dens = _producto_estandar(k, a, ell, 1)
            _acumular_grado(coeficientes, 2 * k + 2 * a - 2 * ell - 1,
                            coef * _cociente(nums, dens) * qv ** ell)
        return coeficientes

    k, a = m // 2, n // 2
    coef = Scalar(qbinom(2 * k + 2 * a, 2 * k))
    coeficientes[2 * k + 2 * a] = coef
    for ell in range(1, k + 1):
        nums, dens = _producto_estandar(k, a, ell, 1)
        nums.append(2 * k + 2 * a - 2 * ell)
        dens.append(2 * k + 2 * a)
        _acumular_grado(coeficientes, 2 * k + 2 * a - 2 * ell,
                        coef * _cociente(nums, dens) * qv ** ell)
    return coeficientes


def _mult_odd(m, n, qv):
    coeficientes = {}
    if m % 2 and n % 2:
        k, a = (m - 1) // 2, (n - 1) // 2
        coef = Scalar(qbinom(2 * k + 2 * a + 2, 2 * k + 1))
        coeficientes[2 * k + 2 * a + 2] = coef
        for ell in range(1, k + 2):
            nums, dens = [], []
            for mm in range(1, ell + 1):
                nums += [2 * a - 2 * mm + 2, 2 * k - 2 * mm + 4]
                dens += [2 * k + 2 * a - 2 * mm + 3, 2 * mm]
            primero = _cociente(
                nums + [2 * k + 2 * a - 2 * ell + 2, 2 * k - 2 * ell + 2],
                dens + [2 * k + 2 * a + 2, 2 * k + 2],
            )
            # el [2a-2ell+2] del denominador se cancela con el factor m = ell
            segundo = _cociente(
                nums + [2 * k + 2 * a - 2 * ell + 3, 2 * k + 2 * a - 2 * ell + 3, 2 * ell],
                dens + [2 * k + 2 * a + 2, 2 * a - 2 * ell + 2, 2 * k + 2],
            )
            _acumular_grado(coeficientes, 2 * k + 2 * a - 2 * ell + 2,
                            coef * (primero + segundo) * qv ** ell)
        return coeficientes

    if m % 2 or n % 2:
        if m % 2:
            k, a = (m - 1) // 2, n // 2
            coef = Scalar(qbinom(2 * k + 2 * a + 1, 2 * k + 1))
        else:
            k, a = m // 2, (n - 1) // 2
            coef = Scalar(qbinom(2 * k + 2 * a + 1, 2 * k))
        coeficientes[2 * k + 2 * a + 1] = coef
        for ell in range(1, k + 1):
            nums, dens = _producto_estandar(k, a, ell, 3)
            _acumular_grado(coeficientes, 2 * k + 2 * a - 2 * ell + 1,
                            coef * _cociente(nums, dens) * qv ** ell)
        return coeficientes

    k, a = m // 2, n // 2
    coef = Scalar(qbinom(2 * k + 2 * a, 2 * k))
    coeficientes[2 * k + 2 * a] = coef
    for ell in range(1, k + 1):
        nums, dens = _producto_estandar(k, a, ell, 1)
        _acumular_grado(coeficientes, 2 * k + 2 * a - 2 * ell,
                        coef * _cociente(nums, dens) * qv ** ell)
    return coeficientes


@lru_cache(maxsize=None)
def _mult_closed(p, m, n, modo):
    if m == 0 or n == 0:
        return ((m + n, ONE),)
    qv = q_varsigma(modo)
    if p is Parity.EV:
        coeficientes = _mult_ev(m, n, qv)
    else:
        coeficientes = _mult_odd(m, n, qv)
    return tuple(sorted((d, c) for d, c in coeficientes.items() if not c.is_zero()))


def mult_closed(p, m, n, modo=VarsigmaMode.GENERIC):
    """Coeficientes de B^{(d)} en B^{(m)}B^{(n)} según las fórmulas cerradas"""
    _verificar_n(m, n)
    return dict(_mult_closed(_parity(p), m, n, VarsigmaMode(modo)))


def mult_direct(p, m, n, modo=VarsigmaMode.GENERIC):
    """Los mismos coeficientes obtenidos multiplicando en Q(q,ς)[B]"""
    _verificar_n(m, n)
    return idp_basis_expand(idp_closed(p, m, modo) * idp_closed(p, n, modo), p, modo)


# ---------------------------------------------------------------------------
# Imagen PBW y comultiplicación
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _potencia_B(d, modo):
    if d == 0:
        return u_one()
    return u_mul(_potencia_B(d - 1, modo), u_B(modo))


def idp_to_pbw(x, modo=VarsigmaMode.GENERIC):
    """Sustituye B = F + ςEK⁻¹ y normaliza"""
    modo = VarsigmaMode(modo)
    resultado = u_zero()
    for d, c in x.coeffs.items():
        resultado = u_add(resultado, _potencia_B(d, modo).scale(c))
    return resultado


@lru_cache(maxsize=None)
def idp_pbw(p, n, modo=VarsigmaMode.GENERIC):
    return idp_to_pbw(idp_closed(p, n, modo), modo)


def _es_tipo_a(p, n):
    # exponente binom(2c,2) y desfase ⌊(r-2)/2⌋ ; el otro tipo usa binom(2c+1,2) y ⌊(r-1)/2⌋
    return (_parity(p) is Parity.EV) == (n % 2 == 0)


@lru_cache(maxsize=None)
def s_component(p, n, r, modo=VarsigmaMode.GENERIC):
    """S_{n,r} de la fórmula cerrada; cero fuera de 0 <= r <= n"""
    if n < 0 or r < 0 or r > n:
        return u_zero()
    qv = q_varsigma(modo)
    tipo_a = _es_tipo_a(p, n)
    k_potencia = u_k_power(r - n)
    total = u_zero()
    for c in range(r // 2 + 1):
        if tipo_a:
            base, indice = comb(2 * c, 2), -((r - 2) // 2)
        else:
            base, indice = comb(2 * c + 1, 2), -((r - 1) // 2)
        centro = u_mul(u_h_binom(indice, c), k_potencia)
        for a in range(r - 2 * c + 1):
            e = base + (r - 2 * c) * (r - n) - a * (r - 2 * c - a)
            termino = u_mul(u_mul(u_divided_power('Echeck', a, modo), centro),
                            u_divided_power('F', r - 2 * c - a, modo))
            total = u_add(total, termino.scale((qv ** c).times_monomial(e)))
    return total


@lru_cache(maxsize=None)
def s_component_fhy(p, n, r, modo=VarsigmaMode.GENERIC):
    """S_{n,r} en la forma invertida F^{(a)} [h;·]_c K^{r-n} Ě^{(r-2c-a)}"""
    if n < 0 or r < 0 or r > n:
        return u_zero()
    qv = q_varsigma(modo)
    tipo_a = _es_tipo_a(p, n)
    k_potencia = u_k_power(r - n)
    total = u_zero()
    for c in range(r // 2 + 1):
        if tipo_a:
            base, indice = 3 * c, 1 - c + (r - 2) // 2
        else:
            base, indice = c, 1 - c + (r - 1) // 2
        centro = u_mul(u_h_binom(indice, c), k_potencia)
        signo = -1 if c % 2 else 1
        for a in range(r - 2 * c + 1):
            e = base - (r - 2 * c) * (r - n) + a * (r - 2 * c - a)
            termino = u_mul(u_mul(u_divided_power('F', a, modo), centro),
                            u_divided_power('Echeck', r - 2 * c - a, modo))
            total = u_add(total, termino.scale((qv ** c).times_monomial(e) * signo))
    return total


def comult_closed(p, n, modo=VarsigmaMode.GENERIC):
    _verificar_n(n)
    return [ComultTerm(r, s_component(_parity(p), n, r, VarsigmaMode(modo))) for r in range(n + 1)]


def comult_fhy(p, n, modo=VarsigmaMode.GENERIC):
    _verificar_n(n)
    return [ComultTerm(r, s_component_fhy(_parity(p), n, r, VarsigmaMode(modo))) for r in range(n + 1)]


def comult_assemble(p, n, terminos, modo=VarsigmaMode.GENERIC):
    """sum_r idp_to_pbw(B^{(n-r)}) ⊗ S_{n,r} dentro de U⊗U"""
    total = t_zero()
    for r, derecha in terminos:
        total = t_add(total, t_from_pair(idp_pbw(_parity(p), n - r, VarsigmaMode(modo)), derecha))
    return total


def comult_direct(p, n, modo=VarsigmaMode.GENERIC):
    """Δ aplicado a la imagen PBW de B^{(n)}: la verdad de referencia"""
    _verificar_n(n)
    return delta(idp_pbw(_parity(p), n, VarsigmaMode(modo)))


def comult_recurrence(p, n, r, modo=VarsigmaMode.GENERIC):
    """
    Lados de [n]S_{n,r} = [n-r]K⁻¹S_{n-1,r} + (Ě+F)S_{n-1,r-1}
        + qς β(n-r+1) K⁻¹S_{n-1,r-2} - qς β(n-1) S_{n-2,r-2}.
    """
    p = _parity(p)
    modo = VarsigmaMode(modo)
    qv = q_varsigma(modo)
    k_inv = u_gen('Kinv')
    e_mas_f = u_add(u_echeck(modo), u_gen('F'))

    izquierda = s_component(p, n, r, modo).scale(qint_sc(n))
    derecha = u_mul(k_inv, s_component(p, n - 1, r, modo)).scale(qint_sc(n - r))
    derecha = u_add(derecha, u_mul(e_mas_f, s_component(p, n - 1, r - 1, modo)))
    derecha = u_add(derecha, u_mul(k_inv, s_component(p, n - 1, r - 2, modo)).scale(qv * beta(p, n - r + 1)))
    derecha = u_add(derecha, s_component(p, n - 2, r - 2, modo).scale(-(qv * beta(p, n - 1))))
    return izquierda, derecha


def serialize_bpoly(x):
    if x.is_zero():
        return "0"
    partes = []
    for d, c in x.coeffs.items():
        monomio = "1" if d == 0 else ("B" if d == 1 else f"B^{d}")
        if c.is_one():
            partes.append(monomio)
        elif d == 0:
            partes.append(f"({serialize_scalar(c)})")
        else:
            partes.append(f"({serialize_scalar(c)})*{monomio}")
    return " + ".join(partes)


def serialize_basis(coeficientes, simbolo='B'):
    """Mapeo grado -> Scalar en la base B^{(d)}"""
    if not coeficientes:
        return "0"
    partes = []
    for d, c in sorted(coeficientes.items()):
        partes.append(f"({serialize_scalar(c)})*{simbolo}^({d})")
    return " + ".join(partes)
