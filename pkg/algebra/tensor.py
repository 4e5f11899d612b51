"""
Álgebra U⊗U y comultiplicación Δ.
Δ(E) = E⊗1 + K⊗E, Δ(F) = 1⊗F + F⊗K⁻¹, Δ(K^{±1}) = K^{±1}⊗K^{±1}.
"""

import logging
from functools import lru_cache
from types import MappingProxyType

from algebra.coeff import ONE, sc_bar, sc_specialize_varsigma, serialize_scalar
from algebra.errors import RequiresSpecialized
from algebra.pbw import (
    UNIT,
    PBWMonomial,
    UElement,
    acumular,
    chi_monomial,
    serialize_monomial,
    u_from_monomial,
    u_mul,
)

logger = logging.getLogger(__name__)


class TensorElement:
    """Mapeo finito (monomio, monomio) -> Scalar"""

    __slots__ = ('_terms',)

    def __init__(self, terms=None):
        self._terms = {
            (PBWMonomial(*l), PBWMonomial(*r)): s
            for (l, r), s in (terms or {}).items()
            if not s.is_zero()
        }

    @classmethod
    def _crudo(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = {k: s for k, s in terms.items() if not s.is_zero()}
        return obj

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def is_zero(self):
        return not self._terms

    def is_varsigma_free(self):
        return all(s.is_varsigma_free() for s in self._terms.values())

    def scale(self, s):
        return TensorElement._crudo({k: v * s for k, v in self._terms.items()})

    def __add__(self, other):
        return t_add(self, other)

    def __sub__(self, other):
        return t_add(self, -other)

    def __neg__(self):
        return TensorElement._crudo({k: -s for k, s in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return t_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        if self._terms.keys() != other._terms.keys():
            return False
        return all(s == other._terms[k] for k, s in self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __str__(self):
        return serialize_tensor(self)


def t_zero():
    return TensorElement._crudo({})


def t_one():
    return TensorElement._crudo({(UNIT, UNIT): ONE})


def t_add(s, t):
    if t.is_zero():
        return s
    if s.is_zero():
        return t
    suma = dict(s._terms)
    for k, v in t._terms.items():
        acumular(suma, k, v)
    return TensorElement._crudo(suma)


def t_from_pair(x, y):
    """x⊗y extendido bilinealmente"""
    terms = {}
    for ml, sl in x.terms.items():
        for mr, sr in y.terms.items():
            terms[(ml, mr)] = sl * sr
    return TensorElement._crudo(terms)


@lru_cache(maxsize=None)
def _producto_monomios(m1, m2):
    return tuple(u_mul(u_from_monomial(*m1), u_from_monomial(*m2)).terms.items())


def t_mul(s, t):
    """(x⊗y)(x'⊗y') = xx'⊗yy', sin trenzado"""
    if s.is_zero() or t.is_zero():
        return t_zero()
    acumulado = {}
    for (l1, r1), c1 in s._terms.items():
        for (l2, r2), c2 in t._terms.items():
            c = c1 * c2
            izquierda = _producto_monomios(l1, l2)
            derecha = _producto_monomios(r1, r2)
            for ml, sl in izquierda:
                cl = c * sl
                for mr, sr in derecha:
                    acumular(acumulado, (ml, mr), cl * sr)
    return TensorElement._crudo(acumulado)


def delta_gen(g):
    E = PBWMonomial(1, 0, 0)
    F = PBWMonomial(0, 0, 1)
    K = PBWMonomial(0, 1, 0)
    Kinv = PBWMonomial(0, -1, 0)
    imagenes = {
        'E': {(E, UNIT): ONE, (K, E): ONE},
        'F': {(UNIT, F): ONE, (F, Kinv): ONE},
        'K': {(K, K): ONE},
        'Kinv': {(Kinv, Kinv): ONE},
    }
    if g not in imagenes:
        raise ValueError(f"Generador desconocido: {g}")
    return TensorElement._crudo(imagenes[g])


@lru_cache(maxsize=None)
def _delta_potencia(g, n):
    if n == 0:
        return t_one()
    return t_mul(_delta_potencia(g, n - 1), delta_gen(g))


@lru_cache(maxsize=None)
def _delta_monomio(a, b, c):
    # Δ(K^b) = K^b⊗K^b directamente, también para b < 0
    kb = PBWMonomial(0, b, 0)
    k_potencia = TensorElement._crudo({(kb, kb): ONE})
    return t_mul(t_mul(_delta_potencia('E', a), k_potencia), _delta_potencia('F', c))


def delta(x):
    """Δ como homomorfismo de álgebras, monomio a monomio"""
    resultado = {}
    for (a, b, c), s in x.terms.items():
        for k, v in _delta_monomio(a, b, c)._terms.items():
            acumular(resultado, k, v * s)
    return TensorElement._crudo(resultado)


def t_specialize_varsigma(t):
    return TensorElement._crudo({k: sc_specialize_varsigma(s) for k, s in t._terms.items()})


def t_chi(t):
    """χ⊗χ: barra en coeficientes y χ en cada factor"""
    if not t.is_varsigma_free():
        raise RequiresSpecialized("χ⊗χ requiere coeficientes sin ς")
    resultado = t_zero()
    for (l, r), s in t._terms.items():
        par = t_from_pair(chi_monomial(*l), chi_monomial(*r))
        resultado = t_add(resultado, par.scale(sc_bar(s)))
    return resultado


def t_left_component(t, m):
    """Coeficiente (en U) del monomio izquierdo m"""
    return UElement._crudo({r: s for (l, r), s in t._terms.items() if l == m})


# ---------------------------------------------------------------------------
# U⊗U⊗U, solo para la coasociatividad
# ---------------------------------------------------------------------------

class TripleElement:
    """Mapeo (monomio, monomio, monomio) -> Scalar"""

    __slots__ = ('terms',)

    def __init__(self, terms):
        self.terms = {k: s for k, s in terms.items() if not s.is_zero()}

    def __eq__(self, other):
        if not isinstance(other, TripleElement):
            return NotImplemented
        if self.terms.keys() != other.terms.keys():
            return False
        return all(s == other.terms[k] for k, s in self.terms.items())

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            f"({serialize_scalar(self.terms[k])})*" + "⊗".join(_factor(m) for m in k)
            for k in sorted(self.terms)
        )


def delta_left(t):
    """(Δ⊗id)"""
    acumulado = {}
    for (l, r), s in t.terms.items():
        for (l1, l2), c in _delta_monomio(*l).terms.items():
            acumular(acumulado, (l1, l2, r), s * c)
    return TripleElement(acumulado)


def delta_right(t):
    """(id⊗Δ)"""
    acumulado = {}
    for (l, r), s in t.terms.items():
        for (r1, r2), c in _delta_monomio(*r).terms.items():
            acumular(acumulado, (l, r1, r2), s * c)
    return TripleElement(acumulado)


def _factor(m):
    texto = serialize_monomial(m)
    return f"({texto})" if "*" in texto else texto


def serialize_tensor(t):
    if t.is_zero():
        return "0"
    partes = []
    for k in sorted(t._terms):
        s = t._terms[k]
        par = f"{_factor(k[0])}⊗{_factor(k[1])}"
        partes.append(par if s.is_one() else f"({serialize_scalar(s)})*{par}")
    return " + ".join(partes)
