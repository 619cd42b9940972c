"""
Shared fixtures for the `faddeyeva-voigt` test suite.

Read more about conftest.py under:
- https://docs.pytest.org/en/stable/fixture.html
- https://docs.pytest.org/en/stable/writing_plugins.html
"""


# ruff and mypy per file settings
#
# empty lines
# ruff: noqa: E302, E303

# fmt: off



import numpy
import pytest

from faddeyeva_voigt.engine import AccuracyControl, accuracy_from_tiny, tiny_min
from faddeyeva_voigt.scalar_kernels import PlatformLimits, platform_limits



SEED = 20100101



@pytest.fixture
def limits() -> PlatformLimits:
    return platform_limits()

@pytest.fixture
def eps(limits: PlatformLimits) -> float:
    return limits.eps

@pytest.fixture
def ctl_min() -> AccuracyControl:
    """Accuracy control at the highest accuracy, tiny = tiny_min."""
    return accuracy_from_tiny(tiny_min())

@pytest.fixture
def rng() -> numpy.random.Generator:
    """Seeded generator, independent of the test order."""
    return numpy.random.default_rng(SEED)

@pytest.fixture
def first_quadrant_points(rng: numpy.random.Generator) -> list[tuple[float, float]]:
    """Sample points with log-distributed x in [1e-3, 1e3] and y in [1e-20, 1e4]."""
    xs = 10.0 ** rng.uniform(-3.0, 3.0, 2000)
    ys = 10.0 ** rng.uniform(-20.0, 4.0, 2000)
    return [(float(x), float(y)) for x, y in zip(xs, ys, strict=True)]
