import pytest
from hypothesis import settings

from algebra.coeff import VarsigmaMode
from algebra.idp import Parity

settings.register_profile('kernel', max_examples=40, deadline=None)
settings.load_profile('kernel')


@pytest.fixture(params=[VarsigmaMode.GENERIC, VarsigmaMode.SPECIALIZED], ids=['generic', 'specialized'])
def modo(request):
    return request.param


@pytest.fixture(params=[Parity.EV, Parity.ODD], ids=['ev', 'odd'])
def paridad(request):
    return request.param


@pytest.fixture
def entorno_limpio(monkeypatch):
    """Quita las variables IDP_* para que valgan los valores por defecto"""
    for nombre in ('IDP_MAX_N', 'IDP_WORKERS', 'IDP_SEED'):
        monkeypatch.delenv(nombre, raising=False)
    return monkeypatch
