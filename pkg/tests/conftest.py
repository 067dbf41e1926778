import pytest

from corepart.moments import GTable


@pytest.fixture(scope="session")
def table():
    return GTable()
