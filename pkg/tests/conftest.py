import pytest

from necklacemap.decomposition import build_tables
from necklacemap.numtheory import RingParams

_CACHE = {}


@pytest.fixture(scope="session")
def tables_for():
    """Session cache of coset tables; builds are deterministic, so sharing is safe."""

    def get(n, q, order="desc"):
        key = (n, q, order)
        if key not in _CACHE:
            _CACHE[key] = build_tables(RingParams.create(n, q, order))
        return _CACHE[key]

    return get
