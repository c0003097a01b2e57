import pytest
from hypothesis import HealthCheck, settings

from symcrys.rootdata import lambda_doubled, lambda_zero, make_odd_window

settings.register_profile("symcrys", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("symcrys")


@pytest.fixture(scope="session")
def rd1():
    return make_odd_window(1)


@pytest.fixture(scope="session")
def rd3():
    return make_odd_window(3)


@pytest.fixture(scope="session")
def rd5():
    return make_odd_window(5)


@pytest.fixture(scope="session")
def rank2(rd3):
    return rd3.restrict([1, 3])


@pytest.fixture(scope="session")
def lam0():
    return lambda_zero()


@pytest.fixture(scope="session")
def lamd(rd3):
    return lambda_doubled(rd3)
