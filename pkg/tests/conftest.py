import pytest
from hypothesis import HealthCheck, settings

from hecke_walks.hecke import HeckeAlgebra
from hecke_walks.rootdata import build_root_datum

settings.register_profile("repo", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")


@pytest.fixture(scope="session")
def algebra():
    """Memoized HeckeAlgebra factory keyed by (type, rank, flavor, L)."""
    cache = {}

    def get(t, r, flavor="adjoint", L=None):
        key = (t, r, flavor, None if L is None else tuple(L))
        if key not in cache:
            cache[key] = HeckeAlgebra(build_root_datum(t, r, flavor), L)
        return cache[key]

    return get
