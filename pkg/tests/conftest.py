import pytest
from hypothesis import HealthCheck, settings

from services.notation_service import parse_ideal

settings.register_profile("rees", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("rees")

XYZ = ["x", "y", "z"]
XZ = ["x", "z"]


@pytest.fixture
def xyz():
    return lambda text: parse_ideal(text, XYZ)


@pytest.fixture
def xz():
    return lambda text: parse_ideal(text, XZ)


@pytest.fixture
def intro_q(xyz):
    return xyz("x^7, y^3, z^2")


@pytest.fixture
def intro_i(xyz):
    return xyz("x^7, y^3, z^2, x^5*y, x^4*z, x^3*y^2, x^2*y*z, y^2*z")
