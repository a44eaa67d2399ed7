from __future__ import annotations

import os
import sys

import numpy as np
import pytest
from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", deadline=None, max_examples=60, derandomize=True)
settings.load_profile("default")

SEED = int(os.environ.get("GF2MAT_TEST_SEED", "20240101"))


@pytest.fixture
def rng():
    return np.random.default_rng(SEED)
