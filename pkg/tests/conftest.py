import pytest

from degbasis import bipartite_family, generating_set, graph_family


@pytest.fixture(scope="session")
def graph_fam():
    return graph_family()


@pytest.fixture(scope="session")
def bip_fam():
    return bipartite_family()


@pytest.fixture(scope="session")
def basis_g1(graph_fam):
    return generating_set(graph_fam, 1)


@pytest.fixture(scope="session")
def basis_g2(graph_fam):
    return generating_set(graph_fam, 2)


@pytest.fixture(scope="session")
def basis_b2(bip_fam):
    return generating_set(bip_fam, 2)
