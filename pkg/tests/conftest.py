"""
Shared fixtures.
"""
import pytest

from app.network.network import Network


@pytest.fixture
def network_one():
    """Reduced 3-cell degree-2 network."""
    return Network(((1, 1, 0), (0, 0, 2), (1, 1, 0)))


@pytest.fixture
def network_two():
    """network_one with every arc split into 3."""
    return Network(((3, 3, 0), (0, 0, 6), (3, 3, 0)))


@pytest.fixture
def network_three():
    """network_two with 2 loops added to every cell."""
    return Network(((5, 3, 0), (0, 2, 6), (3, 3, 2)))


@pytest.fixture
def two_cycle():
    return Network(((0, 1), (1, 0)))


@pytest.fixture
def two_cell_pair():
    """The two minimal 2-cell degree-1 networks."""
    return Network(((0, 1), (1, 0))), Network(((1, 0), (1, 0)))
