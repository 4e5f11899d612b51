"""
Identidades escalares entre enteros cuánticos y las identidades en K⁻² que
cierran las recurrencias de la comultiplicación.
Cada función devuelve la diferencia LHS - RHS; la identidad vale si es cero.
Autor: cmsr92
"""

from math import comb

from algebra.coeff import ONE, Scalar
from algebra.pbw import u_add, u_k_power, u_one, u_zero
from algebra.qcomb import qbinom, qint, qint_base, qint_sc


# ---------------------------------------------------------------------------
# Enteros cuánticos
# ---------------------------------------------------------------------------

def eq1(n, m):
    """[n+m] + [n-m] = [n][2]_{q^m}"""
    return qint(n + m) + qint(n - m) - qint(n) * qint_base(2, m)


def eq2(n, m):
    """[n+m][n-m] = [n]² - [m]²"""
    return qint(n + m) * qint(n - m) - (qint(n) * qint(n) - qint(m) * qint(m))


def eq3(m, n, l):
    """[m][m+n] - [l][l+n] = [m-l][m+l+n]"""
    return qint(m) * qint(m + n) - qint(l) * qint(l + n) - qint(m - l) * qint(m + l + n)


def eq4(n):
    """[2n] = [2][n]_{q²}"""
    return qint(2 * n) - qint(2) * qint_base(n, 2)


def eq5(l, k, a):
    izquierda = (
        qint(2 * k + 2 * a - 2 * l + 2) * qint(2 * a - 2 * l + 2) * qint(2 * k - 2 * l + 2)
        + qint(2 * k + 2 * a - 2 * l + 3) ** 2 * qint(2 * l)
        - qint(2 * k + 1) ** 2 * qint(2 * l)
    )
    return izquierda - qint(2 * a - 2 * l + 2) * qint(2 * k + 2) * qint(2 * k + 2 * a + 2)


def qbinom_simetria(m, n):
    return qbinom(m, n) - qbinom(m, m - n)


def qbinom_en_uno(m, n):
    """Diferencia entera entre [m, n] en q = 1 y el binomial clásico"""
    return qbinom(m, n).evaluate_at_one() - comb(m, n)


# ---------------------------------------------------------------------------
# Identidades en X = K⁻²
# ---------------------------------------------------------------------------

def _lineal(e, const=-1):
    """q^e X + const, como UElement en potencias de K"""
    return u_add(u_k_power(-2).scale(Scalar.monomial(e)), u_one().scale(const))


def _q(e):
    return Scalar.monomial(e)


def _suma(*terminos):
    total = u_zero()
    for t in terminos:
        total = u_add(total, t)
    return total


def k_identity_even_r(l, r, c, a):
    """Para n = 2l, r par; denominador común q^{4c-2r}X - 1"""
    d = _lineal(4 * c - 2 * r)
    izquierda = _suma(
        d.scale(_q(r - 2 * a) * qint_sc(2 * l - r)),
        d.scale(_q(2 * l - a) * qint_sc(a)),
        _lineal(-2 * r).scale(_q(2 * c + r - 2 * l - a) * qint_sc(r - 2 * c - a)),
        _lineal(-2 * a).scale(_q(2 * c - 2 * l) * qint_sc(2 * c)),
    )
    return izquierda - d.scale(qint_sc(2 * l))


def k_identity_odd_r(l, r, c, a):
    """Para n = 2l, r impar; denominador común q^{4c-2r+2}X - 1"""
    d = _lineal(4 * c - 2 * r + 2)
    n_comun = _lineal(2 - 2 * r)
    x = u_k_power(-2)
    izquierda = _suma(
        n_comun.scale(_q(r - 2 * a) * qint_sc(2 * l - r)),
        d.scale(_q(2 * l - a) * qint_sc(a)),
        n_comun.scale(_q(2 * c + r - 2 * l - a) * qint_sc(r - 2 * c - a)),
        _lineal(-2 * a).scale(_q(2 * c - 2 * l) * qint_sc(2 * c)),
        x.scale(_q(1 - r - 2 * a) * qint_sc(2 * l - r + 1) * (_q(4 * c) - ONE)),
    )
    return izquierda - d.scale(qint_sc(2 * l))


def k_identity_odd_n_even_r(l, r, c, a):
    """Para n = 2l+1, r par; denominador común q^{4-2r}X - 1"""
    d = _lineal(4 - 2 * r)
    x = u_k_power(-2)
    factor = _q(4 * c) - ONE
    izquierda = _suma(
        d.scale(_q(r - 4 * c - 2 * a) * qint_sc(2 * l + 1 - r)),
        x.scale(_q(-4 * c - r + 3 - 2 * a) * factor * qint_sc(2 * l + 2 - r)),
        _lineal(4 * c + 4 - 2 * r).scale(_q(-4 * c - a + 2 * l + 1) * qint_sc(a)),
        d.scale(_q(r - a - 2 * c - 1 - 2 * l) * qint_sc(r - 2 * c - a)),
        _lineal(-2 * a).scale(_q(-4 * c + 2 - 2 * l) * factor / (_q(2) - ONE)),
        u_one().scale(-(_q(-4 * c + 1) * factor * qint_sc(2 * l))),
    )
    return izquierda - d.scale(qint_sc(2 * l + 1))


def k_identity_odd_n_odd_r(l, r, c, a):
    """Para n = 2l+1, r impar; denominador común q^{2-2r}X - 1"""
    d = _lineal(2 - 2 * r)
    m = _lineal(4 * c + 2 - 2 * r)
    izquierda = _suma(
        m.scale(_q(r - 4 * c - 2 * a) * qint_sc(2 * l + 1 - r)),
        m.scale(_q(1 + 2 * l - 4 * c - a) * qint_sc(a)),
        d.scale(_q(-2 * c + r - 1 - 2 * l - a) * qint_sc(r - 2 * c - a)),
        _lineal(-2 * a).scale(_q(-2 * c + 1 - 2 * l) * qint_sc(2 * c)),
        u_one().scale(-(_q(-4 * c + 1) * qint_sc(2 * l) * (_q(4 * c) - ONE))),
    )
    return izquierda - d.scale(qint_sc(2 * l + 1))


def k_identity(n, r, c, a):
    """Selecciona la identidad según la paridad de n y de r"""
    l = n // 2
    if n % 2 == 0:
        if r % 2 == 0:
            return k_identity_even_r(l, r, c, a)
        return k_identity_odd_r(l, r, c, a)
    if r % 2 == 0:
        return k_identity_odd_n_even_r(l, r, c, a)
    return k_identity_odd_n_odd_r(l, r, c, a)
