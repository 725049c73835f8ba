"""Sinc-DVR bound states, spectroscopic constants, and vibrationally
averaged properties for diatomic molecules."""

from .electronic import CounterpoiseRow, FieldEnergyScan, counterpoise_correct, finite_field_dipole
from .errors import (
    AnalysisError,
    ConfigError,
    DataError,
    DiatomError,
    DomainError,
    NotFoundError,
    NumericalError,
)
from .potentials import (
    MolecularConstants,
    MorsePotential,
    TabulatedPotential,
    build_tabulated,
    find_minimum,
    harmonic_frequency,
    morse_levels_analytic,
    rotational_constant,
)
from .properties import PropertyCurve, dipole_at_re, vibrational_average
from .refdata import get_preset, list_presets
from .solver import (
    BoundState,
    LevelTable,
    RadialGrid,
    auto_grid,
    build_hamiltonian,
    default_grid,
    numerov_solve,
    numerov_wavefunction,
    solve_bound_states,
)
from .spectroscopy import compare_levels, constants_from_potential, fit_level_constants
from .units import DiatomSystem, IsotopeSpecies, convert, reduced_mass

__version__ = "0.1.0"
