import pytest

from spatialgraphs.catalog import fixture, heawood_family, petersen_family


@pytest.fixture(scope="session")
def n9():
    return fixture("N9")


@pytest.fixture(scope="session")
def np10():
    return fixture("N'10")


@pytest.fixture(scope="session")
def petersen():
    return petersen_family()


@pytest.fixture(scope="session")
def heawood():
    return heawood_family()
