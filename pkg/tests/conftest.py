import pytest

from linemod.presets import preset
from linemod.rewrite import complete


@pytest.fixture(scope="session")
def hhat_system():
    return complete(preset("sl11_Hhat"), max_degree=8)


@pytest.fixture(scope="session")
def h_system():
    return complete(preset("sl11_H"), max_degree=8)


@pytest.fixture(scope="session")
def a_system():
    return complete(preset("sl2_A"), max_degree=8)


@pytest.fixture(scope="session")
def color_system():
    return complete(preset("slc_H"), max_degree=8)


@pytest.fixture(scope="session")
def sl21_system():
    return complete(preset("sl21_Hhat"), max_degree=5)
