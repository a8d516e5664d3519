import pytest

from tools.scenario import DiracWeylParameters
from tools.scenario.catalog import ee_dw0, ee_dw1, sa_scalar, trivial_sa, trivial_ssa


@pytest.fixture(scope="session")
def dw_params():
    return DiracWeylParameters()


@pytest.fixture(scope="session")
def trivial_sa_triple():
    return trivial_sa().build_triple()


@pytest.fixture(scope="session")
def trivial_ssa_triple():
    return trivial_ssa().build_triple()


@pytest.fixture(scope="session")
def ee_dw0_triple():
    return ee_dw0().build_triple()


@pytest.fixture(scope="session")
def ee_dw1_triple():
    return ee_dw1().build_triple()


@pytest.fixture(scope="session")
def sa_scalar_triple():
    return sa_scalar().build_triple()


@pytest.fixture(params=["trivial_sa_triple", "trivial_ssa_triple", "ee_dw0_triple",
                        "ee_dw1_triple", "sa_scalar_triple"])
def canned_triple(request):
    return request.getfixturevalue(request.param)
