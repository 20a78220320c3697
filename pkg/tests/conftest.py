import pytest

from subdepth.chartab import character_table
from subdepth.constructions import base_groups
from subdepth.reproduce import AcceptanceContext


@pytest.fixture(scope="session")
def bg():
    return base_groups()


@pytest.fixture(scope="session")
def s4_table(bg):
    return character_table(bg.s4)


@pytest.fixture(scope="session")
def v4_table(bg):
    return character_table(bg.v4)


@pytest.fixture(scope="session")
def d8_table(bg):
    return character_table(bg.d8)


@pytest.fixture(scope="session")
def ctx():
    """Shared acceptance context so heavyweight tables are built once."""
    return AcceptanceContext()
