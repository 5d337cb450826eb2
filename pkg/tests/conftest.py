import pytest
from hypothesis import HealthCheck, settings

from spectop.rings import parse_ring

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def Z():
    return parse_ring("Z")


@pytest.fixture(scope="session")
def F2():
    return parse_ring("GF(2)[x]")


@pytest.fixture(scope="session")
def F3():
    return parse_ring("GF(3)[x]")
