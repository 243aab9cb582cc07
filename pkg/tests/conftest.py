import pytest

from sidoncodes import build_tower


@pytest.fixture(scope="session")
def t226():
    """q=2, k=2, n=6: the smallest interesting tower (F_64)."""
    return build_tower(2, 1, 2, 3, 0)


@pytest.fixture(scope="session")
def t2210():
    """q=2, k=2, n=10: the deep tower (r=5) for the two-component families."""
    return build_tower(2, 1, 2, 5, 0)


@pytest.fixture(scope="session")
def t326():
    """q=3, k=2, n=6: odd characteristic (F_729)."""
    return build_tower(3, 1, 2, 3, 0)


@pytest.fixture(scope="session")
def t426():
    """q=4 (p=2, m=2), k=2, n=6: four-level tower (F_4096)."""
    return build_tower(2, 2, 2, 3, 0)
