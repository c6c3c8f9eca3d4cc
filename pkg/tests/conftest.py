import pytest
from hypothesis import HealthCheck, settings

from irrbase.suzuki import SuzukiParams, build_suzuki_group

settings.register_profile(
    "irrbase",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("irrbase")


@pytest.fixture(scope="session")
def sz8_params():
    return SuzukiParams(m=1)


@pytest.fixture(scope="session")
def sz8_delta(sz8_params):
    """Sz(8) on the 65-point ovoid."""
    return build_suzuki_group(sz8_params, extended=False, action="delta")


@pytest.fixture(scope="session")
def sz8_delta_ext(sz8_params):
    """Sz(8) extended by the field automorphisms, on the ovoid."""
    return build_suzuki_group(sz8_params, extended=True, action="delta")


@pytest.fixture(scope="session")
def sz8_pairs(sz8_params):
    """Sz(8) on the 2080 unordered ovoid pairs."""
    return build_suzuki_group(sz8_params, extended=False, action="pairs")


@pytest.fixture(scope="session")
def sz8_pairs_ext(sz8_params):
    return build_suzuki_group(sz8_params, extended=True, action="pairs")


@pytest.fixture(scope="session")
def sz8_closure(sz8_delta):
    """Brute-force element set of Sz(8) on the ovoid (tuple images)."""
    from oracles import mulclose

    gens = [tuple(g.image.tolist()) for g in sz8_delta.group.generators]
    return mulclose(gens, sz8_delta.domain.size)
