from functools import lru_cache

import pytest

from sigmagroups import catalog
from sigmagroups.perm import Perm


@lru_cache(maxsize=None)
def grp(name):
    """Catalog groups are rebuilt once per session so their caches are shared."""
    return catalog.build(name)


@lru_cache(maxsize=None)
def sig(text):
    return catalog.parse_sigma_spec(text)


def elem(G, cycles):
    """Index of a permutation given in cycle notation."""
    return G.index_of_perm(Perm.from_cycles(cycles, G.perms[0].degree))


def perm_subgroup(G, *cycles):
    return G.generate(elem(G, c) for c in cycles)


@pytest.fixture
def S3():
    return grp("S3")


@pytest.fixture
def S4():
    return grp("S4")


@pytest.fixture
def A4():
    return grp("A4")


@pytest.fixture
def A5():
    return grp("A5")


@pytest.fixture
def c5s3():
    return grp("C5xS3")
