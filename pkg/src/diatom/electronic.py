"""Post-processing of electronic-structure energy scans: counterpoise
BSSE correction and finite-field dipole extraction."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DataError, DomainError
from .units import HARTREE_TO_INVCM


@dataclass(frozen=True)
class CounterpoiseRow:
    """One scan geometry: dimer energy and both ghost-basis monomer energies."""

    r: float  # a0
    e_dimer: float  # hartree
    e_a_ghost: float  # hartree
    e_b_ghost: float  # hartree

    def __post_init__(self):
        vals = (self.r, self.e_dimer, self.e_a_ghost, self.e_b_ghost)
        if not all(np.isfinite(v) for v in vals):
            raise DataError(f"non-finite counterpoise row at R={self.r}")


def counterpoise_correct(rows):
    """Boys-Bernardi corrected interaction curve.

    V(R) = E_dimer - E_A(ghost B) - E_B(ghost A), returned as
    (R in a0, V in cm^-1) arrays ready for build_tabulated.
    """
    rows = list(rows)
    if not rows:
        raise DataError("no counterpoise rows")
    r = np.array([row.r for row in rows])
    bad = np.nonzero(np.diff(r) <= 0)[0]
    if bad.size:
        raise DataError(f"R values not strictly increasing at row {bad[0] + 1}")
    v_h = np.array([row.e_dimer - row.e_a_ghost - row.e_b_ghost for row in rows])
    return r, v_h * HARTREE_TO_INVCM


@dataclass(frozen=True)
class FieldEnergyScan:
    """Energies on the symmetric four-point field stencil {-2F,-F,+F,+2F}."""

    field_step: float  # a.u. of electric field
    e_m2: float  # E(-2F), hartree
    e_m1: float  # E(-F)
    e_p1: float  # E(+F)
    e_p2: float  # E(+2F)
    e_0: float = None  # E(0), optional

    def __post_init__(self):
        if self.field_step <= 0:
            raise DomainError(f"field_step must be positive, got {self.field_step}")


def finite_field_dipole(scan):
    """Permanent dipole d = -dE/dF from the four-point stencil.

    d = -[E(-2F) - 8E(-F) + 8E(F) - E(2F)] / (12F), exact through F^4.
    Returns (dipole in a.u., error estimate): the estimate is the
    Richardson gap between the four-point value and the coarse central
    difference at step 2F, scaled by 1/15.
    """
    f = scan.field_step
    d4 = -(scan.e_m2 - 8.0 * scan.e_m1 + 8.0 * scan.e_p1 - scan.e_p2) / (12.0 * f)
    d_coarse = -(scan.e_p2 - scan.e_m2) / (4.0 * f)
    return d4, abs(d4 - d_coarse) / 15.0
