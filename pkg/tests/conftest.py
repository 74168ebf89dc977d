import random
from pathlib import Path

import pytest

from latnak.algebra import lattice_algebra, nakayama, path_algebra_an
from latnak.config.schema import LimitsConfig, RunSettings
from latnak.lattice import LatticeSet, young_pqr


@pytest.fixture
def test_data_dir():
    """Return path to test data directory"""
    return Path(__file__).parent / "data"


@pytest.fixture
def configs_dir(test_data_dir):
    """Return path to test configs directory"""
    return test_data_dir / "configs"


@pytest.fixture
def lattices_dir(test_data_dir):
    """Return path to test lattice sets directory"""
    return test_data_dir / "lattices"


@pytest.fixture
def basic_config(configs_dir):
    """Return path to basic config"""
    return configs_dir / "basic_config.toml"


@pytest.fixture
def full_config(configs_dir):
    """Return path to full config"""
    return configs_dir / "full_config.toml"


@pytest.fixture
def minimal_config(configs_dir):
    """Return path to minimal config"""
    return configs_dir / "minimal_config.toml"


@pytest.fixture
def rng():
    """Generator of the random property suites, seeded like a default run"""
    return random.Random(RunSettings().seed)


@pytest.fixture
def sample_size():
    return LimitsConfig().max_sample


@pytest.fixture
def ka2():
    """KA_2, the smallest algebra with a nonzero arrow"""
    return path_algebra_an(2)


@pytest.fixture
def ka3():
    return path_algebra_an(3)


@pytest.fixture
def n42():
    """N(4,2): radical square zero on 1 -> 2 -> 3 -> 4"""
    return nakayama(4, 2)


@pytest.fixture
def y231():
    """Y(2,3,1): rows of widths 3 and 2"""
    return young_pqr(2, 3, 1)


@pytest.fixture
def hook():
    return LatticeSet.of([(1, 1), (1, 2), (2, 1)])


@pytest.fixture
def square():
    """The full 2 x 2 square"""
    return LatticeSet.of([(1, 1), (1, 2), (2, 1), (2, 2)])


@pytest.fixture
def lattice_y231(y231):
    return lattice_algebra(y231)
