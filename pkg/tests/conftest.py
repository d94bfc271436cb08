import pytest

from blochkit import SamplingConfig
from blochkit.symbols import Polynomial


def mkpoly(arity, terms):
    """Build a polynomial symbol from a {exponent-tuple: coefficient} mapping."""
    items = tuple((tuple(e), complex(c)) for e, c in sorted(terms.items()))
    return Polynomial(arity, items)


@pytest.fixture(scope="session")
def fast_cfg():
    """Sampling configuration small enough for unit tests but still accurate."""
    return SamplingConfig(samples=2000, seed=7, refine_restarts=3, refine_iters=30)


@pytest.fixture(scope="session")
def tiny_cfg():
    """Very small configuration for tests that only need coarse estimates."""
    return SamplingConfig(samples=600, seed=4, refine_restarts=2, refine_iters=15)
