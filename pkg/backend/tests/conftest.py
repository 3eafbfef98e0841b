import numpy as np
import pytest

from app.config import Settings
from app.models.quaternion import Quaternion
from app.services.bernstein import COUNTEREXAMPLE_POINT, counterexample_pair

SEED = 20240521


@pytest.fixture
def settings() -> Settings:
    """Defaults except for the heavy sample counts of the theorem harness"""
    return Settings().with_overrides(
        sampling={
            "alpha_grid": 201,
            "axes_per_slice": 64,
            "global_samples": 5000,
            "circle_samples": 2000,
        }
    )


@pytest.fixture
def full_settings() -> Settings:
    return Settings()


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(SEED)


@pytest.fixture
def pair():
    """P = (X - i)(X - j)(X - k), Q = 2X (X - i)(X - j)"""
    return counterexample_pair()


@pytest.fixture
def witness_point() -> Quaternion:
    """(1 + 9i + 4j - sqrt(2) k) / 10"""
    return COUNTEREXAMPLE_POINT
