import random

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite",
    settings(
        max_examples=100,
        derandomize=True,
        deadline=None,
        suppress_health_check=[HealthCheck.too_slow],
    ),
)
settings.load_profile("suite")

DEFAULT_SEED = 0x5EED


@pytest.fixture
def rng():
    return random.Random(DEFAULT_SEED)
