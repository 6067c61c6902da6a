import hashlib
import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fthub.lattice import (LatticeError, build_hex_fragment, build_periodic_hex,
                           build_square_fragment, degree_histogram,
                           lattice_from_json, lattice_to_json, regular_degree,
                           ring_lattice)
from conftest import CHEVRON_CELLS, PARALLELOGRAM_CELLS

HEX44_SHA = "2baddd80280a6a6a8bd0c82827d767782249b954ea671c2272558054264ec0f0"


class TestPeriodicHex:
    def test_4x4_counts(self, hex44):
        assert hex44.n_sites == 32
        assert hex44.n_edges == 48
        assert degree_histogram(hex44) == {3: 32}

    def test_2x2_counts(self):
        # smallest torus: 8 sites, 12 bonds, still simple and 3-regular
        lat = build_periodic_hex(2, 2)
        assert lat.n_sites == 8
        assert lat.n_edges == 12
        assert degree_histogram(lat) == {3: 8}

    @given(st.integers(2, 7), st.integers(2, 7))
    @settings(max_examples=15, deadline=None)
    def test_adjacency_symmetric(self, lx, ly):
        lat = build_periodic_hex(lx, ly)
        assert np.array_equal(lat.adjacency, lat.adjacency.T)
        assert lat.n_sites == 2 * lx * ly
        # handshake: 2 * edges = sum of degrees = 3N
        assert 2 * lat.n_edges == lat.degrees().sum() == 3 * lat.n_sites

    @pytest.mark.parametrize("lx,ly", [(1, 4), (4, 1), (0, 2), (1, 1)])
    def test_too_small_rejected(self, lx, ly):
        with pytest.raises(LatticeError):
            build_periodic_hex(lx, ly)

    def test_site_indexing_convention(self, hex44):
        for s in hex44.site_info:
            assert s.index == 2 * (s.l_x + s.l_y * 4) + s.color

    def test_adjacency_golden_hash(self, hex44):
        digest = hashlib.sha256(hex44.adjacency.astype(np.uint8).tobytes())
        assert digest.hexdigest() == HEX44_SHA


class TestHexFragment:
    def test_single_hexagon(self, hexagon):
        assert hexagon.n_sites == 6
        assert hexagon.n_edges == 6
        assert hexagon.n_edge_sites == 6
        assert hexagon.n_center == 0
        assert degree_histogram(hexagon) == {2: 6}

    def test_parallelogram_census(self, parallelogram):
        assert parallelogram.n_sites == 70
        assert parallelogram.n_edge_sites == 22
        assert parallelogram.n_center == 48

    def test_chevron_census(self, chevron):
        assert chevron.n_sites == 48
        assert chevron.n_edge_sites == 20
        assert chevron.n_center == 28

    @pytest.mark.parametrize("cells", [PARALLELOGRAM_CELLS, CHEVRON_CELLS])
    def test_role_partition(self, cells):
        lat = build_hex_fragment(cells)
        assert lat.n_center + lat.n_edge_sites == lat.n_sites

    def test_disconnected_rejected(self):
        with pytest.raises(LatticeError, match="connected"):
            build_hex_fragment([(0, 0), (5, 5)])

    def test_empty_rejected(self):
        with pytest.raises(LatticeError):
            build_hex_fragment([])

    def test_duplicate_cells_rejected(self):
        with pytest.raises(LatticeError, match="duplicate"):
            build_hex_fragment([(0, 0), (0, 0)])


class TestHelpers:
    def test_square_fragment(self):
        lat = build_square_fragment(3, 3)
        assert lat.n_sites == 9
        assert lat.n_edges == 12
        assert degree_histogram(lat) == {2: 4, 3: 4, 4: 1}

    def test_ring(self):
        assert regular_degree(ring_lattice(6)) == 2

    def test_regular_degree_none_for_fragment(self, parallelogram):
        assert regular_degree(parallelogram) is None


class TestJson:
    def test_round_trip(self, hex44):
        text = lattice_to_json(hex44)
        back = lattice_from_json(text)
        assert np.array_equal(back.adjacency, hex44.adjacency)
        assert back.kind == hex44.kind
        assert back.dims == hex44.dims

    def test_edges_sorted(self, hexagon):
        doc = json.loads(lattice_to_json(hexagon))
        assert doc["edges"] == sorted(doc["edges"])

    def test_deterministic(self, hex44):
        assert lattice_to_json(hex44) == lattice_to_json(build_periodic_hex(4, 4))
