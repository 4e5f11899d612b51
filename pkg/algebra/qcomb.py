"""
Combinatoria cuántica: enteros balanceados [n], enteros con base [n]_{q^m},
factoriales y binomiales, todos como LaurentPoly en q.
"""

from functools import lru_cache

from algebra.coeff import ONE_LP, ZERO_LP, LaurentPoly, Scalar, lp_mul
from algebra.errors import NegativeInput, ZeroBase


@lru_cache(maxsize=None)
def qint_base(n, m):
    """[n]_{q^m} = (q^{mn} - q^{-mn}) / (q^m - q^{-m})"""
    if m == 0:
        raise ZeroBase("la base q^0 no define un entero cuántico")
    if m < 0:
        return qint_base(n, -m)
    if n == 0:
        return ZERO_LP
    if n < 0:
        return -qint_base(-n, m)
    # q^{m(n-1)} + q^{m(n-3)} + ... + q^{-m(n-1)}
    return LaurentPoly({(m * (n - 1 - 2 * k), 0): 1 for k in range(n)})


def qint(n):
    return qint_base(n, 1)


@lru_cache(maxsize=None)
def qfact(n):
    if n < 0:
        raise NegativeInput(f"[{n}]! no está definido")
    resultado = ONE_LP
    for i in range(2, n + 1):
        resultado = lp_mul(resultado, qint(i))
    return resultado


@lru_cache(maxsize=None)
def qbinom(m, n):
    """
    Binomial cuántico [m]!/([n]![m-n]!); cero fuera de 0 <= n <= m.
    Se calcula con la recurrencia de Pascal para no dividir.
    """
    if m < 0:
        raise NegativeInput(f"qbinom con m={m} < 0")
    if n < 0 or n > m:
        return ZERO_LP
    if n == 0 or n == m:
        return ONE_LP
    # [m, n] = q^{-n}[m-1, n] + q^{m-n}[m-1, n-1]
    return qbinom(m - 1, n).shift(-n, 0) + qbinom(m - 1, n - 1).shift(m - n, 0)


def qint_sc(n):
    return Scalar(qint(n))


def qfact_sc(n):
    return Scalar(qfact(n))


def qbinom_sc(m, n):
    return Scalar(qbinom(m, n))
