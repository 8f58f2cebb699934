import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from homcoh import fixtures


@pytest.fixture
def a3():
    return fixtures.assoc3(1, 2)


@pytest.fixture
def a3_b1():
    return fixtures.assoc3(1, 1)


@pytest.fixture
def b2():
    return fixtures.assoc2()


@pytest.fixture
def phi():
    return fixtures.phi_assoc()


@pytest.fixture
def l4a():
    return fixtures.lie4a(1, 1, 1, 1)


@pytest.fixture
def g2():
    return fixtures.g2()


@pytest.fixture
def heis():
    return fixtures.heisenberg()
