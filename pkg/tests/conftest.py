"""Shared fixtures and a deterministic hypothesis profile."""

from importlib import resources

import pytest
from hypothesis import HealthCheck, settings

from topoprobe import load_model

settings.register_profile(
    "deterministic",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("deterministic")


def packaged_model(name):
    return load_model(resources.files("topoprobe") / "models" / name)


@pytest.fixture(scope="session")
def fibonacci():
    return packaged_model("fibonacci.json")


@pytest.fixture(scope="session")
def semion():
    return packaged_model("semion.json")
