import numpy as np
import pytest

import diatom as dt

PRESET_NAMES = ["LiBe", "LiMg", "LiCa", "LiSr", "LiYb"]

# published level counts per molecule, in preset order
PUBLISHED_LEVEL_COUNTS = {"LiBe": 18, "LiMg": 20, "LiCa": 28, "LiSr": 30, "LiYb": 31}


@pytest.fixture(scope="session")
def presets():
    return {name: dt.get_preset(name) for name in PRESET_NAMES}


@pytest.fixture(scope="session")
def solve_preset():
    """Factory: DVR-solve a preset's Morse model, cached per (name, n)."""
    cache = {}

    def _solve(name, n_points=1001):
        key = (name, n_points)
        if key not in cache:
            preset = dt.get_preset(name)
            pot = preset.morse()
            grid = dt.default_grid(pot, preset.system, n_points=n_points)
            h = dt.build_hamiltonian(pot, preset.system, grid)
            cache[key] = (dt.solve_bound_states(h, grid, preset.system), grid)
        return cache[key]

    return _solve


def morse_samples(pot, n=24, lo_frac=0.6, hi_frac=3.0):
    """Sample a Morse curve for TabulatedPotential round-trip tests."""
    r = np.linspace(lo_frac * pot.re, hi_frac * pot.re, n)
    return r, pot(r)
