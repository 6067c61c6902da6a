import pytest

from fthub.lattice import build_hex_fragment, build_periodic_hex, ring_lattice, single_hexagon
from fthub.tiling import cover_hex_fragment, cover_periodic_hex
from fthub.trotterbounds import ModelParams

# 5 x 5 parallelogram patch: 70 sites, 22 edge sites, 48 center sites
PARALLELOGRAM_CELLS = [(l, m) for l in range(5) for m in range(5)]

# chevron-shaped 15-hexagon patch: 48 sites, 20 edge sites, 28 center sites
CHEVRON_CELLS = [(0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4),
                 (3, 0), (3, 1), (3, 2), (3, 3), (3, 4),
                 (4, 0), (4, 1), (4, 2), (4, 3)]


@pytest.fixture(scope="session")
def hex44():
    return build_periodic_hex(4, 4)


@pytest.fixture(scope="session")
def hex66():
    return build_periodic_hex(6, 6)


@pytest.fixture(scope="session")
def cover44(hex44):
    return cover_periodic_hex(hex44)


@pytest.fixture(scope="session")
def cover66(hex66):
    return cover_periodic_hex(hex66)


@pytest.fixture(scope="session")
def hexagon():
    return single_hexagon()


@pytest.fixture(scope="session")
def hexagon_cover(hexagon):
    return cover_hex_fragment(hexagon)


@pytest.fixture(scope="session")
def ring4():
    return ring_lattice(4)


@pytest.fixture(scope="session")
def ring6():
    return ring_lattice(6)


@pytest.fixture(scope="session")
def parallelogram():
    return build_hex_fragment(PARALLELOGRAM_CELLS)


@pytest.fixture(scope="session")
def chevron():
    return build_hex_fragment(CHEVRON_CELLS)


@pytest.fixture(scope="session")
def hubbard_params():
    return ModelParams("hubbard", tau=1.0, u=4.0)


@pytest.fixture(scope="session")
def extended_params():
    return ModelParams("extended_hubbard", tau=1.0, u=4.0, v=2.0)
