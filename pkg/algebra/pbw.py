"""
U_q(sl2) como módulo libre sobre los monomios PBW E^a K^b F^c.
Relaciones: KE = q²EK, KF = q⁻²FK, EF - FE = (K - K⁻¹)/(q - q⁻¹).
Autor: cmsr92
"""

import logging
from functools import lru_cache
from types import MappingProxyType
from typing import NamedTuple

from algebra.coeff import (
    ONE,
    ZERO,
    Q,
    Scalar,
    VarsigmaMode,
    sc_bar,
    sc_specialize_varsigma,
    serialize_scalar,
    varsigma,
)
from algebra.errors import NegativeInput, NotIntegral, RequiresSpecialized
from algebra.qcomb import qfact_sc, qint_sc

logger = logging.getLogger(__name__)


class PBWMonomial(NamedTuple):
    """E^a K^b F^c; el orden de tupla (a, b, c) es el orden canónico"""
    a: int
    b: int
    c: int


UNIT = PBWMonomial(0, 0, 0)


def acumular(destino, clave, valor):
    if clave in destino:
        destino[clave] = destino[clave] + valor
    else:
        destino[clave] = valor


class UElement:
    """Combinación lineal finita de monomios PBW con coeficientes Scalar"""

    __slots__ = ('_terms',)

    def __init__(self, terms=None):
        self._terms = {
            PBWMonomial(*m): s for m, s in (terms or {}).items() if not s.is_zero()
        }

    @classmethod
    def _crudo(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = {m: s for m, s in terms.items() if not s.is_zero()}
        return obj

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def is_zero(self):
        return not self._terms

    def coefficient(self, a, b, c):
        return self._terms.get(PBWMonomial(a, b, c), ZERO)

    def is_varsigma_free(self):
        return all(s.is_varsigma_free() for s in self._terms.values())

    def scale(self, s):
        s = _escalar(s)
        if s.is_zero():
            return UElement._crudo({})
        return UElement._crudo({m: v * s for m, v in self._terms.items()})

    def __add__(self, other):
        return u_add(self, other)

    def __sub__(self, other):
        return u_add(self, -other)

    def __neg__(self):
        return UElement._crudo({m: -s for m, s in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, UElement):
            return u_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n):
        if n < 0:
            # solo s*K^b es invertible en la base PBW
            if len(self._terms) != 1:
                raise NotIntegral(f"{self} no es invertible")
            (m, s), = self._terms.items()
            if m.a or m.c:
                raise NotIntegral(f"{self} no es invertible")
            return u_from_monomial(0, m.b * n, 0, s ** n)
        resultado = u_one()
        for _ in range(n):
            resultado = u_mul(resultado, self)
        return resultado

    def __eq__(self, other):
        if not isinstance(other, UElement):
            return NotImplemented
        if self._terms.keys() != other._terms.keys():
            return False
        return all(s == other._terms[m] for m, s in self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __str__(self):
        return serialize_u(self)

    def __repr__(self):
        return f"UElement({serialize_u(self)!r})"


def _escalar(s):
    if isinstance(s, Scalar):
        return s
    return Scalar(s)


def u_from_monomial(a=0, b=0, c=0, coef=ONE):
    return UElement._crudo({PBWMonomial(a, b, c): _escalar(coef)})


def u_one():
    return u_from_monomial()


def u_zero():
    return UElement._crudo({})


def u_k_power(b):
    return u_from_monomial(0, b, 0)


def u_gen(g):
    """Generador E, F, K o Kinv"""
    monomios = {
        'E': (1, 0, 0),
        'F': (0, 0, 1),
        'K': (0, 1, 0),
        'Kinv': (0, -1, 0),
    }
    if g not in monomios:
        raise ValueError(f"Generador desconocido: {g}")
    return u_from_monomial(*monomios[g])


def u_add(x, y):
    if y.is_zero():
        return x
    if x.is_zero():
        return y
    suma = dict(x._terms)
    for m, s in y._terms.items():
        acumular(suma, m, s)
    return UElement._crudo(suma)


@lru_cache(maxsize=None)
def _f_por_e(c, a):
    """
    Forma normal de F^c E^a, usando
    F E^a = E^a F - [a] E^{a-1} (q^{a-1}K - q^{1-a}K⁻¹)/(q - q⁻¹).
    """
    if c == 0 or a == 0:
        return ((PBWMonomial(a, 0, c), ONE),)
    acumulado = {}
    for (i, j, k), s in _f_por_e(c - 1, a):
        acumular(acumulado, PBWMonomial(i, j, k + 1), s)

    factor = qint_sc(a) / (Q - Q ** -1)
    for (i, j, k), s in _f_por_e(c - 1, a - 1):
        base = s * factor
        # F^k K = q^{2k} K F^k
        acumular(acumulado, PBWMonomial(i, j + 1, k), -base.times_monomial(a - 1 + 2 * k))
        acumular(acumulado, PBWMonomial(i, j - 1, k), base.times_monomial(1 - a - 2 * k))

    return tuple(sorted(
        ((m, s) for m, s in acumulado.items() if not s.is_zero()),
        key=lambda par: par[0],
    ))


def u_mul(x, y):
    """Producto reescrito a forma normal PBW"""
    if x.is_zero() or y.is_zero():
        return u_zero()
    acumulado = {}
    for (a, b, c), s in x._terms.items():
        for (a2, b2, c2), t in y._terms.items():
            st = s * t
            for (i, j, k), n in _f_por_e(c, a2):
                # K^b E^i = q^{2bi} E^i K^b ; F^k K^{b2} = q^{2k b2} K^{b2} F^k
                e = 2 * b * i + 2 * k * b2
                acumular(acumulado, PBWMonomial(a + i, b + j + b2, k + c2), (st * n).times_monomial(e))
    return UElement._crudo(acumulado)


def u_echeck(modo=VarsigmaMode.GENERIC):
    """Ě = ς E K⁻¹"""
    return u_from_monomial(1, -1, 0, varsigma(modo))


def u_B(modo=VarsigmaMode.GENERIC):
    """B = F + ς E K⁻¹"""
    return u_gen('F') + u_echeck(modo)


@lru_cache(maxsize=None)
def u_divided_power(g, n, modo=VarsigmaMode.GENERIC):
    if n < 0:
        raise NegativeInput(f"potencia dividida con n={n}")
    base = {
        'E': lambda: u_gen('E'),
        'F': lambda: u_gen('F'),
        'Echeck': lambda: u_echeck(modo),
    }
    if g not in base:
        raise ValueError(f"Generador desconocido: {g}")
    return (base[g]() ** n).scale(ONE / qfact_sc(n))


def u_h():
    """h = (K⁻² - 1)/(q² - 1)"""
    d = Q * Q - 1
    return UElement._crudo({
        PBWMonomial(0, -2, 0): ONE / d,
        UNIT: -ONE / d,
    })


@lru_cache(maxsize=None)
def u_h_binom(a, n):
    """[h; a]_n = prod_{i=1}^n (q^{4a+4i-4} K⁻² - 1)/(q^{4i} - 1)"""
    if n < 0:
        raise NegativeInput(f"h-binomial con n={n}")
    resultado = u_one()
    for i in range(1, n + 1):
        d = Scalar.monomial(4 * i) - 1
        factor = UElement._crudo({
            PBWMonomial(0, -2, 0): Scalar.monomial(4 * a + 4 * i - 4) / d,
            UNIT: -ONE / d,
        })
        resultado = u_mul(resultado, factor)
    return resultado


@lru_cache(maxsize=None)
def chi_monomial(a, b, c):
    # χ(E^a K^b F^c) = F^c K^b E^a, con F^c K^b = q^{2bc} K^b F^c
    return u_mul(u_from_monomial(0, b, c, Scalar.monomial(2 * b * c)), u_from_monomial(a, 0, 0))


def u_chi(x):
    """Anti-involución χ: fija E, F, K e invierte q"""
    if not x.is_varsigma_free():
        raise RequiresSpecialized("χ requiere coeficientes sin ς; especializar primero")
    resultado = u_zero()
    for (a, b, c), s in x._terms.items():
        resultado = u_add(resultado, chi_monomial(a, b, c).scale(sc_bar(s)))
    return resultado


def u_weight_eval(x, m):
    """
    Evaluación formal del exponente de K en el peso m: E^a K^b F^c -> q^{mb} E^a F^c.
    Es lineal, no multiplicativa.
    """
    acumulado = {}
    for (a, b, c), s in x._terms.items():
        acumular(acumulado, PBWMonomial(a, 0, c), s.times_monomial(m * b))
    return UElement._crudo(acumulado)


def u_specialize_varsigma(x):
    return UElement._crudo({m: sc_specialize_varsigma(s) for m, s in x._terms.items()})


def _monomio_texto(m):
    factores = []
    for nombre, e in (('E', m.a), ('K', m.b), ('F', m.c)):
        if e == 1:
            factores.append(nombre)
        elif e:
            factores.append(f"{nombre}^{e}")
    return "*".join(factores) if factores else "1"


def serialize_monomial(m):
    return _monomio_texto(PBWMonomial(*m))


def serialize_u(x):
    if x.is_zero():
        return "0"
    partes = []
    for m in sorted(x._terms):
        s = x._terms[m]
        monomio = _monomio_texto(m)
        if s.is_one():
            partes.append(monomio)
        elif m == UNIT:
            partes.append(f"({serialize_scalar(s)})")
        else:
            partes.append(f"({serialize_scalar(s)})*{monomio}")
    return " + ".join(partes)
