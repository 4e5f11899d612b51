"""
Aritmética exacta de coeficientes
Polinomios de Laurent en (q, ς) con enteros de precisión arbitraria y su cuerpo
de fracciones. En la gramática canónica ς se escribe `v`.
Autor: cmsr92
"""

import logging
import re
from enum import Enum
from types import MappingProxyType

from sympy import ZZ
from sympy.polys.rings import ring

from algebra.errors import (
    DenominatorVanishes,
    DivisionByZero,
    NotIntegral,
    ParseError,
    RequiresSpecialized,
)

logger = logging.getLogger(__name__)

# Anillo de polinomios ordinarios donde sympy calcula el mcd
_ANILLO, _, _ = ring("q,v", ZZ)


class LaurentPoly:
    """
    Polinomio de Laurent en q y ς: mapeo (i, j) -> entero no nulo,
    donde i es la potencia de q y j la de ς.
    """

    __slots__ = ('_terms', '_hash')

    def __init__(self, terms=None):
        limpio = {}
        for (i, j), c in (terms or {}).items():
            c = int(c)
            if c:
                limpio[(int(i), int(j))] = c
        self._terms = limpio
        self._hash = None

    @classmethod
    def _crudo(cls, terms):
        # terms ya viene sin ceros
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c):
        return cls._crudo({(0, 0): int(c)} if c else {})

    @classmethod
    def monomial(cls, i=0, j=0, c=1):
        return cls._crudo({(i, j): int(c)} if c else {})

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def is_zero(self):
        return not self._terms

    def is_one(self):
        return len(self._terms) == 1 and self._terms.get((0, 0)) == 1

    def is_varsigma_free(self):
        return all(j == 0 for (_, j) in self._terms)

    def min_exponents(self):
        return (min(i for i, _ in self._terms), min(j for _, j in self._terms))

    def leading_coefficient(self):
        return self._terms[max(self._terms)]

    def shift(self, di, dj):
        """Multiplica por el monomio q^di ς^dj"""
        if not di and not dj:
            return self
        return LaurentPoly._crudo({(i + di, j + dj): c for (i, j), c in self._terms.items()})

    def scale(self, k):
        k = int(k)
        if not k:
            return ZERO_LP
        return LaurentPoly._crudo({m: c * k for m, c in self._terms.items()})

    def evaluate_at_one(self):
        """Suma de coeficientes (q = ς = 1)"""
        return sum(self._terms.values())

    def __add__(self, other):
        if not isinstance(other, (LaurentPoly, int)):
            return NotImplemented
        return lp_add(self, _como_laurent(other))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (LaurentPoly, int)):
            return NotImplemented
        return lp_add(self, -_como_laurent(other))

    def __rsub__(self, other):
        return lp_add(_como_laurent(other), -self)

    def __neg__(self):
        return LaurentPoly._crudo({m: -c for m, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return lp_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            # solo los monomios ±q^i ς^j son invertibles
            if len(self._terms) != 1:
                raise NotIntegral(f"{self} no es invertible en el anillo de Laurent")
            ((i, j), c), = self._terms.items()
            if c not in (1, -1):
                raise NotIntegral(f"{self} no es invertible en el anillo de Laurent")
            return LaurentPoly.monomial(i * n, j * n, c ** (-n))
        resultado = ONE_LP
        for _ in range(n):
            resultado = lp_mul(resultado, self)
        return resultado

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            if not self._terms or set(self._terms) == {(0, 0)}:
                # las constantes se comparan iguales a int
                self._hash = hash(self._terms.get((0, 0), 0))
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self):
        return serialize_laurent(self)

    def __repr__(self):
        return f"LaurentPoly({serialize_laurent(self)!r})"


ZERO_LP = LaurentPoly._crudo({})
ONE_LP = LaurentPoly._crudo({(0, 0): 1})


def _como_laurent(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    raise TypeError(f"No se puede convertir {type(x).__name__} a LaurentPoly")


def lp_add(a, b):
    """Suma término a término, podando ceros"""
    if not b._terms:
        return a
    if not a._terms:
        return b
    out = dict(a._terms)
    for m, c in b._terms.items():
        s = out.get(m, 0) + c
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return LaurentPoly._crudo(out)


def lp_mul(a, b):
    """Producto de convolución"""
    if not a._terms or not b._terms:
        return ZERO_LP
    out = {}
    for (i1, j1), c1 in a._terms.items():
        for (i2, j2), c2 in b._terms.items():
            m = (i1 + i2, j1 + j2)
            out[m] = out.get(m, 0) + c1 * c2
    return LaurentPoly._crudo({m: c for m, c in out.items() if c})


def lp_test_nonneg(a):
    return all(c >= 0 for c in a.terms.values())


def lp_bar(a):
    """q -> q⁻¹ sobre un polinomio sin ς"""
    if not a.is_varsigma_free():
        raise RequiresSpecialized(f"la barra no está definida con ς simbólico: {a}")
    return LaurentPoly._crudo({(-i, j): c for (i, j), c in a.terms.items()})


def _especializar_laurent(a):
    out = {}
    for (i, j), c in a.terms.items():
        m = (i - j, 0)
        out[m] = out.get(m, 0) + c
    return LaurentPoly._crudo({m: c for m, c in out.items() if c})


# ---------------------------------------------------------------------------
# Fracciones
# ---------------------------------------------------------------------------

def _a_sympy(a, di, dj):
    return _ANILLO.from_dict({(i - di, j - dj): c for (i, j), c in a.terms.items()})


def _desde_sympy(p, di, dj):
    return LaurentPoly._crudo({(i + di, j + dj): int(c) for (i, j), c in p.terms()})


def _reducir(num, den):
    """
    Forma canónica num/den: den es un polinomio ordinario no divisible por q ni
    por ς, primo con num, con coeficiente principal positivo.
    """
    if den.is_zero():
        raise DivisionByZero("denominador nulo")
    if num.is_zero():
        return ZERO_LP, ONE_LP
    if den.is_one():
        return num, den

    if len(den.terms) == 1:
        ((i, j), c), = den.terms.items()
        if c in (1, -1):
            return num.shift(-i, -j).scale(c), ONE_LP

    si, sj = num.min_exponents()
    ti, tj = den.min_exponents()
    p, g = _a_sympy(num, si, sj).cancel(_a_sympy(den, ti, tj))
    nuevo_num = _desde_sympy(p, si - ti, sj - tj)
    nuevo_den = _desde_sympy(g, 0, 0)
    if nuevo_den.leading_coefficient() < 0:
        nuevo_num, nuevo_den = -nuevo_num, -nuevo_den
    return nuevo_num, nuevo_den


class Scalar:
    """Elemento de Q(q, ς) como cociente de dos LaurentPoly, siempre reducido"""

    __slots__ = ('num', 'den')

    def __init__(self, num=0, den=1):
        num = _como_laurent(num)
        den = _como_laurent(den)
        self.num, self.den = _reducir(num, den)

    @classmethod
    def _crudo(cls, num, den):
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def monomial(cls, i=0, j=0, c=1):
        return cls._crudo(LaurentPoly.monomial(i, j, c), ONE_LP)

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    def is_varsigma_free(self):
        return self.num.is_varsigma_free() and self.den.is_varsigma_free()

    def times_monomial(self, i, j=0):
        # den no tiene factores monomiales: basta desplazar num
        return Scalar._crudo(self.num.shift(i, j), self.den)

    def __add__(self, other):
        return sc_arith(self, _como_escalar(other), 'add')

    __radd__ = __add__

    def __sub__(self, other):
        return sc_arith(self, _como_escalar(other), 'sub')

    def __rsub__(self, other):
        return sc_arith(_como_escalar(other), self, 'sub')

    def __mul__(self, other):
        if isinstance(other, (Scalar, LaurentPoly, int)):
            return sc_arith(self, _como_escalar(other), 'mul')
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (LaurentPoly, int)):
            return sc_arith(_como_escalar(other), self, 'mul')
        return NotImplemented

    def __truediv__(self, other):
        return sc_arith(self, _como_escalar(other), 'div')

    def __rtruediv__(self, other):
        return sc_arith(_como_escalar(other), self, 'div')

    def __neg__(self):
        return Scalar._crudo(-self.num, self.den)

    def __pow__(self, n):
        if n < 0:
            return ONE / (self ** (-n))
        resultado = ONE
        for _ in range(n):
            resultado = resultado * self
        return resultado

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = _como_escalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return sc_eq(self, other)

    def __hash__(self):
        if self.den.is_one():
            return hash(self.num)
        return hash((self.num, self.den))

    def __str__(self):
        return serialize_scalar(self)

    def __repr__(self):
        return f"Scalar({serialize_scalar(self)!r})"


ZERO = Scalar._crudo(ZERO_LP, ONE_LP)
ONE = Scalar._crudo(ONE_LP, ONE_LP)


def _como_escalar(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, LaurentPoly):
        return Scalar._crudo(x, ONE_LP)
    if isinstance(x, int):
        return Scalar._crudo(LaurentPoly.constant(x), ONE_LP)
    raise TypeError(f"No se puede convertir {type(x).__name__} a Scalar")


def sc_arith(a, b, op):
    """Aritmética de cuerpo; op en {add, sub, mul, div}"""
    if op == 'sub':
        b, op = -b, 'add'

    if op == 'add':
        if b.is_zero():
            return a
        if a.is_zero():
            return b
        if a.den == b.den:
            if a.den.is_one():
                return Scalar._crudo(a.num + b.num, ONE_LP)
            return Scalar(a.num + b.num, a.den)
        return Scalar(a.num * b.den + b.num * a.den, a.den * b.den)

    if op == 'mul':
        if a.is_zero() or b.is_zero():
            return ZERO
        if a.den.is_one() and b.den.is_one():
            return Scalar._crudo(a.num * b.num, ONE_LP)
        return Scalar(a.num * b.num, a.den * b.den)

    if op == 'div':
        if b.is_zero():
            raise DivisionByZero(f"división de {a} entre cero")
        if a.is_zero():
            return ZERO
        return Scalar(a.num * b.den, a.den * b.num)

    raise ValueError(f"Operación desconocida: {op}")


def sc_eq(a, b):
    return a.num * b.den == b.num * a.den


def sc_specialize_varsigma(a):
    """Sustituye ς -> q⁻¹ (qς -> 1)"""
    if a.is_varsigma_free():
        return a
    den = _especializar_laurent(a.den)
    if den.is_zero():
        raise DenominatorVanishes(f"el denominador de {a} se anula en ς = q⁻¹")
    return Scalar(_especializar_laurent(a.num), den)


def sc_bar(a):
    if not a.is_varsigma_free():
        raise RequiresSpecialized(f"la barra requiere ς especializado: {a}")
    return Scalar(lp_bar(a.num), lp_bar(a.den))


def sc_to_laurent(a):
    """Cociente exacto como LaurentPoly; NotIntegral si no existe"""
    if a.den.is_one():
        return a.num
    raise NotIntegral(f"{a} no es un polinomio de Laurent")


# ---------------------------------------------------------------------------
# Gramática canónica
# ---------------------------------------------------------------------------

def _variable(nombre, e):
    if e == 1:
        return nombre
    return f"{nombre}^{e}"


def serialize_laurent(a):
    """Términos ordenados por (i, j) ascendente; el cero es `0`"""
    if a.is_zero():
        return "0"
    partes = []
    for n, ((i, j), c) in enumerate(sorted(a.terms.items())):
        factores = []
        if i:
            factores.append(_variable('q', i))
        if j:
            factores.append(_variable('v', j))
        magnitud = abs(c)
        if not factores:
            cuerpo = str(magnitud)
        elif magnitud == 1:
            cuerpo = "*".join(factores)
        else:
            cuerpo = "*".join([str(magnitud)] + factores)
        if n == 0:
            partes.append(cuerpo if c > 0 else f"-{cuerpo}")
        else:
            partes.append(f" + {cuerpo}" if c > 0 else f" - {cuerpo}")
    return "".join(partes)


def serialize_scalar(a):
    if a.den.is_one():
        return serialize_laurent(a.num)
    return f"({serialize_laurent(a.num)})/({serialize_laurent(a.den)})"


_ENTERO = re.compile(r'^\d+$')
_POTENCIA = re.compile(r'^([qv])(?:\^(-?\d+))?$')


def _parse_termino(texto):
    signo = 1
    if texto.startswith('-'):
        signo, texto = -1, texto[1:]
    coef, i, j = 1, 0, 0
    for factor in texto.split('*'):
        if _ENTERO.match(factor):
            coef *= int(factor)
            continue
        m = _POTENCIA.match(factor)
        if not m:
            raise ParseError(f"Factor inválido: {factor!r}")
        e = int(m.group(2)) if m.group(2) else 1
        if m.group(1) == 'q':
            i += e
        else:
            j += e
    return (i, j), signo * coef


def parse_laurent(texto):
    texto = texto.strip()
    if not texto:
        raise ParseError("Texto vacío")
    if texto == "0":
        return ZERO_LP
    piezas = re.split(r' ([+-]) ', texto)
    terms = {}
    signo = 1
    for k, pieza in enumerate(piezas):
        if k % 2 == 1:
            signo = 1 if pieza == '+' else -1
            continue
        m, c = _parse_termino(pieza.strip())
        terms[m] = terms.get(m, 0) + signo * c
    return LaurentPoly(terms)


_FRACCION = re.compile(r'^\((.*)\)/\((.*)\)$')


def parse_scalar(texto):
    texto = texto.strip()
    m = _FRACCION.match(texto)
    if m:
        return Scalar(parse_laurent(m.group(1)), parse_laurent(m.group(2)))
    return Scalar(parse_laurent(texto))


# Monomios de uso frecuente
Q = Scalar.monomial(1, 0)
V = Scalar.monomial(0, 1)


class VarsigmaMode(str, Enum):
    """ς formal (generic) o ς = q⁻¹ (specialized)"""
    GENERIC = 'generic'
    SPECIALIZED = 'specialized'


def varsigma(modo=VarsigmaMode.GENERIC):
    if VarsigmaMode(modo) is VarsigmaMode.GENERIC:
        return V
    return Scalar.monomial(-1, 0)


def q_varsigma(modo=VarsigmaMode.GENERIC):
    """qς como escalar; vale 1 en modo especializado"""
    if VarsigmaMode(modo) is VarsigmaMode.GENERIC:
        return Scalar.monomial(1, 1)
    return ONE
