import os
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from ramanujan_jets import make_context

settings.register_profile(
    "default", deadline=None, max_examples=25, derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

GOLDEN = Path(__file__).parent / "golden" / "v1"


@pytest.fixture(scope="session")
def ctx():
    return make_context(256)


@pytest.fixture(scope="session")
def golden_dir():
    return GOLDEN
