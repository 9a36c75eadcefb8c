import pytest

from orbikt import fixture


@pytest.fixture(scope="session")
def d4_torus():
    return fixture("d4-torus")


@pytest.fixture(scope="session")
def z4_torus():
    return fixture("z4-torus")


@pytest.fixture(scope="session")
def z2_flip_torus():
    return fixture("z2-flip-torus")


@pytest.fixture(scope="session")
def z2_circle():
    return fixture("z2-circle")


@pytest.fixture(scope="session")
def all_fixtures(d4_torus, z4_torus, z2_flip_torus, z2_circle):
    return {
        "d4-torus": d4_torus,
        "z4-torus": z4_torus,
        "z2-flip-torus": z2_flip_torus,
        "z2-circle": z2_circle,
    }
