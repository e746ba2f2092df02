import pytest

from geofellow.automata import build_geodesic_acceptor
from geofellow.cayley import ball
from geofellow.kernels import available_backends


@pytest.fixture(scope="session")
def acceptor():
    return build_geodesic_acceptor()


@pytest.fixture(scope="session")
def ball12():
    return ball(12)


def pytest_generate_tests(metafunc):
    if "kernel" in metafunc.fixturenames:
        backends = available_backends()
        metafunc.parametrize(
            "kernel", backends.values(), ids=list(backends.keys())
        )
