import pytest

from crystalposets.crystal import generate

MATRIX = (
    ((2, 1), 3),
    ((3, 2), 4),
    ((4, 3), 4),
    ((2, 2), 4),
)


@pytest.fixture(scope="session")
def graphs():
    """The desk-scale test matrix, generated once per session."""
    return {key: generate(*key) for key in MATRIX}


@pytest.fixture(scope="session")
def g21(graphs):
    return graphs[((2, 1), 3)]


@pytest.fixture(scope="session")
def g32(graphs):
    return graphs[((3, 2), 4)]


@pytest.fixture(scope="session")
def g43(graphs):
    return graphs[((4, 3), 4)]


@pytest.fixture(scope="session")
def g22(graphs):
    return graphs[((2, 2), 4)]
