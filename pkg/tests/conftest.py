import os
import random
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "src"))

from core.backend import get_backend  # noqa: E402
from core.types import Backend  # noqa: E402
from storage.file_manager import stokes_tables  # noqa: E402

SEED = 20180806


@pytest.fixture
def precision():
    return 256


@pytest.fixture
def symbolic():
    return get_backend(Backend.SYMBOLIC, 256)


@pytest.fixture
def numeric(precision):
    return get_backend(Backend.NUMERIC, precision)


@pytest.fixture(scope="session")
def tabulated():
    return stokes_tables()


@pytest.fixture
def rng():
    return random.Random(SEED)
