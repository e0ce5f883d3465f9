import os
import random

import pytest
from hypothesis import settings

from extclass.verify import seed as suite_seed

settings.register_profile("extclass", max_examples=60, deadline=None, derandomize=True)
settings.load_profile("extclass")


@pytest.fixture
def rng():
    """Seeded generator; EXTCLASS_SEED overrides the default seed."""
    return random.Random(suite_seed())


@pytest.fixture
def seed_value():
    return suite_seed()


def pytest_report_header(config):
    return f"EXTCLASS_SEED={os.environ.get('EXTCLASS_SEED', suite_seed())}"
