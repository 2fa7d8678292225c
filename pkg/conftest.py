import pytest

from octoval.configuration import Configuration


@pytest.fixture(autouse=True)
def reset_configuration():
    Configuration.reset()
    yield
    Configuration.reset()
