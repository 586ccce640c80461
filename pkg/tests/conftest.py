import numpy as np
import pytest

from hamdet import kernels
from hamdet.gf2k import get_field


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    # compile the jit kernels once so individual tests time their own work
    kernels.warmup()


@pytest.fixture
def rng():
    return np.random.default_rng(0xC0FFEE)


@pytest.fixture
def f8():
    return get_field(8)


@pytest.fixture
def f16():
    return get_field(16)


def pytest_addoption(parser):
    parser.addoption(
        "--acceptance-trials",
        action="store",
        default=None,
        help="override trial counts in the acceptance suite (debugging aid)",
    )
