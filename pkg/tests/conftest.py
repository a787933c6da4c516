import pytest

from liecoh import catalog
from liecoh.families import default_family

BASE_CATALOG = [
    "abelian_1",
    "abelian_2",
    "aff1",
    "heis3",
    "nonunimod3",
    "sl2",
    "sl2_plus_heis3",
    "sl2_semidirect_v1",
    "so3",
    "unimod3(1,0,0)",
    "unimod3(0,1,1)",
]


@pytest.fixture(scope="session")
def algebras():
    return {name: catalog(name) for name in BASE_CATALOG}


@pytest.fixture(scope="session")
def default_families():
    return {name: default_family(name) for name in BASE_CATALOG}
