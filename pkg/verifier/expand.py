"""
Expansión textual de ι-potencias divididas y de sus coproductos en la gramática canónica
"""

import logging

from algebra.coeff import VarsigmaMode
from algebra.idp import (
    Parity,
    comult_assemble,
    comult_closed,
    comult_direct,
    comult_fhy,
    idp_closed,
    idp_pbw,
    serialize_bpoly,
)
from algebra.pbw import serialize_u
from algebra.tensor import serialize_tensor

logger = logging.getLogger(__name__)

BASES = ('B', 'pbw')
FORMAS = ('theorem', 'fhy', 'direct')


def expand_idp(p, n, basis='B', modo=VarsigmaMode.GENERIC):
    if basis not in BASES:
        raise ValueError(f"Base desconocida: {basis}")
    p = Parity(p)
    if basis == 'B':
        return serialize_bpoly(idp_closed(p, n, modo))
    return serialize_u(idp_pbw(p, n, VarsigmaMode(modo)))


def comult_element(p, n, form='theorem', modo=VarsigmaMode.GENERIC):
    """Δ(B^{(n)}) como TensorElement en la presentación pedida"""
    p = Parity(p)
    if form == 'direct':
        return comult_direct(p, n, modo)
    if form == 'theorem':
        return comult_assemble(p, n, comult_closed(p, n, modo), modo)
    if form == 'fhy':
        return comult_assemble(p, n, comult_fhy(p, n, modo), modo)
    raise ValueError(f"Forma desconocida: {form}")


def expand_comult(p, n, form='theorem', modo=VarsigmaMode.GENERIC):
    logger.debug("expand_comult p=%s n=%s form=%s", p, n, form)
    return serialize_tensor(comult_element(p, n, form, modo))
