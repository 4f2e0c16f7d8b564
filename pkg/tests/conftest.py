import math
import os
from unittest.mock import patch

import pytest

from jsf import build_gaussian_jsf
from schema import PumpSpec
from schmidt import decompose
from spectral import FrequencyGrid


def pytest_addoption(parser):
    parser.addoption(
        "--run-slow", action="store_true", default=False, help="run long Monte Carlo and sweeps"
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: mark test as taking more than a few seconds")


def pytest_collection_modifyitems(config, items):
    if not config.getoption("--run-slow"):
        skip_slow = pytest.mark.skip(reason="need --run-slow option to run")
        for item in items:
            if "slow" in item.keywords:
                item.add_marker(skip_slow)


@pytest.fixture
def mock_env():
    """Fixture to ensure environment is clean for each test."""
    with patch.dict(os.environ, {}, clear=True):
        yield


@pytest.fixture(scope="session")
def wide_grid():
    return FrequencyGrid(-8.0, 8.0, 256)


@pytest.fixture(scope="session")
def chirped_kernel(wide_grid):
    """Chirped-pump symmetric kernel at G = 2.5."""
    return build_gaussian_jsf(
        PumpSpec(chirp_coefficient=1.0), math.pi / 4, 2.5, wide_grid, wide_grid, 1.0
    )


@pytest.fixture(scope="session")
def chirped_dec(chirped_kernel):
    return decompose(chirped_kernel)


@pytest.fixture(scope="session")
def flat_kernel(wide_grid):
    """Chirp-free symmetric kernel at G = 2.5."""
    return build_gaussian_jsf(PumpSpec(), math.pi / 4, 2.5, wide_grid, wide_grid, 1.0)


@pytest.fixture(scope="session")
def flat_dec(flat_kernel):
    return decompose(flat_kernel)
