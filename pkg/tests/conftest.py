import mpmath
import pytest


@pytest.fixture(autouse=True)
def ample_ambient_precision():
    """Comparisons in tests need more ambient precision than the default
    15 digits; library calls manage their own working precision."""
    old = mpmath.mp.dps
    mpmath.mp.dps = 60
    yield
    mpmath.mp.dps = old
