"""
Errores del kernel algebraico.
Cada clase lleva el código de salida que usa la CLI.
"""


class IQuantumError(Exception):
    """Error base del kernel"""
    codigo_salida = 4


class DivisionByZero(IQuantumError):
    pass


class DenominatorVanishes(IQuantumError):
    """El denominador se anula tras especializar ς = q⁻¹"""


class RequiresSpecialized(IQuantumError):
    """La operación solo está definida sin ς simbólico (barra, χ)"""


class NotIntegral(IQuantumError):
    """La división exacta en el anillo de Laurent falló"""


class ZeroBase(IQuantumError):
    codigo_salida = 2


class NegativeInput(IQuantumError):
    codigo_salida = 2


class UnknownSuite(IQuantumError):
    codigo_salida = 2


class ParseError(IQuantumError):
    codigo_salida = 2


class ResourceLimit(IQuantumError):
    """Cota por encima del techo configurado en IDP_MAX_N"""
    codigo_salida = 3
