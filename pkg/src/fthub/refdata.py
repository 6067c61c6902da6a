"""Reference values for the periodic hexagonal lattice cost table.

The regression table (``fthub table2``) recomputes every quantity and prints
it next to these reference numbers with a diff column.  Error norms are
quoted at U=4, V=2, tau=1 and rounded to integers; gate and qubit counts are
exact integers.  Keys are lattice sizes N = 2 L^2 for even L in 4..18.
"""

TABLE_N = (32, 72, 128, 200, 288, 392, 512, 648)
TABLE_L = (4, 6, 8, 10, 12, 14, 16, 18)

TABLE_PARAMS = {"u": 4.0, "v": 2.0, "tau": 1.0}

W_TILE = {
    "hubbard": (215, 483, 860, 1344, 1934, 2634, 3439, 4353),
    "extended_hubbard": (1223, 2752, 4894, 7648, 11011, 14989, 19577, 24778),
}

ALPHA_RULES = ("0", "N/4-1", "N/2-1", "N-1")

# per model, per alpha rule: N_Q, N_R, N_T rows over TABLE_N
STEP_TABLE = {
    "hubbard": {
        "0": {
            "n_qubits": (64, 144, 256, 400, 576, 784, 1024, 1296),
            "n_rot": (192, 432, 768, 1200, 1728, 2352, 3072, 3888),
            "n_t": (320, 720, 1280, 2000, 2880, 3920, 5120, 6480),
        },
        "N/4-1": {
            "n_qubits": (71, 161, 287, 449, 647, 881, 1151, 1457),
            "n_rot": (96, 120, 144, 144, 168, 168, 192, 192),
            "n_t": (992, 2352, 4256, 6704, 9696, 13232, 17312, 21936),
        },
        "N/2-1": {
            "n_qubits": (79, 179, 319, 499, 719, 979, 1279, 1619),
            "n_rot": (60, 72, 84, 84, 96, 96, 108, 108),
            "n_t": (1040, 2400, 4304, 6752, 9744, 13280, 17360, 21984),
        },
        "N-1": {
            "n_qubits": (95, 215, 383, 599, 863, 1175, 1535, 1943),
            "n_rot": (36, 42, 48, 48, 54, 54, 60, 60),
            "n_t": (1064, 2424, 4328, 6776, 9768, 13304, 17384, 22008),
        },
    },
    "extended_hubbard": {
        "0": {
            "n_qubits": (64, 144, 256, 400, 576, 784, 1024, 1296),
            "n_rot": (384, 864, 1536, 2400, 3456, 4704, 6144, 7776),
            "n_t": (320, 720, 1280, 2000, 2880, 3920, 5120, 6480),
        },
        "N/4-1": {
            "n_qubits": (71, 161, 287, 449, 647, 881, 1151, 1457),
            "n_rot": (192, 240, 288, 288, 336, 336, 384, 384),
            "n_t": (1664, 3984, 7232, 11408, 16512, 22544, 29504, 37392),
        },
        "N/2-1": {
            "n_qubits": (79, 179, 319, 499, 719, 979, 1279, 1619),
            "n_rot": (120, 144, 168, 168, 192, 192, 216, 216),
            "n_t": (1760, 4080, 7328, 11504, 16608, 22640, 29600, 37488),
        },
        "N-1": {
            "n_qubits": (95, 215, 383, 599, 863, 1175, 1535, 1943),
            "n_rot": (72, 84, 96, 96, 108, 108, 120, 120),
            "n_t": (1808, 4128, 7376, 11552, 16656, 22688, 29648, 37536),
        },
    },
}
