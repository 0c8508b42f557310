import os

import pytest


@pytest.fixture(scope="session")
def fixtures() -> str:
    return os.path.join(os.path.dirname(__file__), "fixtures")
