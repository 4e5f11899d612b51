"""
Traducciones al español para reportes y mensajes de consola
Incluye: suites, identidades verificadas, familias y modos de ς
"""

# Diccionario de traducción de suites
SUITES_TRADUCCION = {
    'qidentities': 'Identidades escalares',
    'pbw-core': 'Núcleo PBW y coproducto',
    'mult-even': 'Multiplicación (familia par)',
    'mult-odd': 'Multiplicación (familia impar)',
    'comult-even': 'Comultiplicación (familia par)',
    'comult-odd': 'Comultiplicación (familia impar)',
    'fhy-forms': 'Forma alternativa del coproducto',
    'proof-recurrences': 'Recurrencias de la demostración',
    'chi': 'Antiautomorfismo χ',
    'positivity': 'Integralidad y positividad',
    'golden': 'Ejemplos dorados',
}

# Diccionario de traducción de identidades
CHECKS_TRADUCCION = {
    # Escalares
    'eq1': '[n+m] + [n-m] = [n][2] en base q^m',
    'eq2': '[n+m][n-m] = [n]² - [m]²',
    'eq3': '[m][m+n] - [l][l+n] = [m-l][m+l+n]',
    'eq4': '[2n] = [2][n] en base q²',
    'eq5': 'Identidad de productos de q-enteros pares e impares',
    'qbinom-symmetry': 'Simetría del q-binomial',
    'qbinom-classical': 'q-binomial en q = 1',
    'qbinom-bar': 'q-binomial invariante por barra',
    'qint-bar': 'q-entero invariante por barra',
    'qfact-bar': 'q-factorial invariante por barra',
    'k-identity': 'Identidad de K',
    # PBW
    'k-kinv': 'K·K⁻¹ = 1',
    'fe-commutator': 'Conmutador EF - FE',
    'kinv-f': 'Conmutación K⁻¹F',
    'f-echeck': 'Relación F·Ě',
    'hbinom-f': 'Paso de [h;a] por F',
    'hbinom-echeck': 'Paso de [h;a] por Ě',
    'echeck-divided': 'Potencia dividida de Ě',
    'divided-mult': 'Producto de potencias divididas',
    'associativity': 'Asociatividad',
    'confluence': 'Confluencia de la forma normal',
    'delta-homomorphism': 'Δ es homomorfismo',
    'coassociativity': 'Coasociatividad',
    'delta-B': 'Δ(B)',
    'delta-one': 'Δ(1) = 1 ⊗ 1',
    'coproduct-divided': 'Coproducto de potencias divididas',
    # Multiplicación
    'idp-oracle': 'Fórmula cerrada contra recurrencia',
    'mult-theorem': 'Fórmula de multiplicación',
    'mult-symmetry': 'Simetría del producto',
    'mult-pbw': 'Producto en PBW',
    # Comultiplicación
    'comult-theorem': 'Fórmula de comultiplicación',
    'fhy-form': 'Forma alternativa de Δ',
    'comult-recurrence': 'Recurrencia de componentes',
    # χ
    'chi-h': 'χ(h)',
    'chi-echeck': 'χ(Ě)',
    'chi-hbinom': 'χ([h;a]_n)',
    'chi-delta': 'Compatibilidad de χ con Δ',
    'chi-involution': 'χ es involución',
    'chi-anti': 'χ es antiautomorfismo',
    'chi-idp': 'χ fija las ι-potencias divididas',
    'specialize-consistency': 'Especialización consistente',
    # Positividad
    'integral': 'Constante integral',
    'positive': 'Constante positiva',
    'weight-profile': 'Perfil por peso',
    # Dorados
    'golden-mult-closed': 'Producto dorado (fórmula cerrada)',
    'golden-mult-direct': 'Producto dorado (cálculo directo)',
    'golden-comult-component': 'Componente dorada de Δ',
    'golden-comult-direct': 'Coproducto dorado (cálculo directo)',
}

FAMILIAS_TRADUCCION = {
    'ev': 'Par',
    'odd': 'Impar',
}

MODOS_TRADUCCION = {
    'generic': 'Genérico',
    'specialized': 'ς = q⁻¹',
}


def _traducir(diccionario, valor):
    if not valor:
        return valor
    return diccionario.get(valor, diccionario.get(str(valor).lower(), valor))


def traducir_suite(suite):
    """Traduce el nombre de una suite; si no se conoce se devuelve tal cual"""
    return _traducir(SUITES_TRADUCCION, suite)


def traducir_check(check_id):
    return _traducir(CHECKS_TRADUCCION, check_id)


def traducir_familia(familia):
    return _traducir(FAMILIAS_TRADUCCION, getattr(familia, 'value', familia))


def traducir_modo(modo):
    return _traducir(MODOS_TRADUCCION, getattr(modo, 'value', modo))
