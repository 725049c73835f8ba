"""Radial bound-state solvers: sinc-DVR eigensolver and Numerov shooting.

The DVR kinetic matrix is the uniform-grid half-line form (grid points
r_i = i*Delta, i >= 1), so grids must start on an integer multiple of
the spacing; RadialGrid.aligned takes care of that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from numba import njit

from .errors import AnalysisError, DomainError, NotFoundError, NumericalError
from .potentials import find_minimum
from .units import HARTREE_TO_INVCM, U_TO_ME


@dataclass(frozen=True)
class RadialGrid:
    r_min: float  # a0
    r_max: float  # a0
    n_points: int

    def __post_init__(self):
        if self.r_min <= 0:
            raise DomainError(f"r_min must be positive, got {self.r_min}")
        if self.r_max <= self.r_min:
            raise DomainError("r_max must exceed r_min")
        if self.n_points < 200:
            raise DomainError(f"need at least 200 grid points, got {self.n_points}")

    @property
    def spacing(self):
        return (self.r_max - self.r_min) / (self.n_points - 1)

    @property
    def points(self):
        return self.r_min + self.spacing * np.arange(self.n_points)

    @classmethod
    def aligned(cls, r_min, r_max, n_points):
        """Round r_min down to a multiple of the spacing (half-line DVR
        requires grid points at integer multiples of Delta)."""
        delta = (r_max - r_min) / (n_points - 1)
        i0 = max(1, math.floor(r_min / delta + 1e-12))
        r0 = i0 * delta
        return cls(r0, r0 + (n_points - 1) * delta, n_points)


@dataclass(frozen=True)
class BoundState:
    v: int  # vibrational index (node count)
    n_rot: int
    energy: float  # cm^-1, negative
    amplitudes: np.ndarray = field(repr=False, compare=False)


@dataclass
class LevelTable:
    system: object
    states: list

    @property
    def d0(self):
        """Dissociation energy from v=0, cm^-1."""
        if not self.states:
            raise AnalysisError("no bound states")
        return -self.states[0].energy

    def energies(self):
        return np.array([s.energy for s in self.states])

    def __len__(self):
        return len(self.states)


def build_hamiltonian(potential, system, grid):
    """Dense symmetric radial Hamiltonian in hartree on the given grid.

    H = T(sinc-DVR, half line) + diag(V(r_i) + N(N+1)/(2 mu r_i^2)).
    """
    delta = grid.spacing
    i0 = int(round(grid.r_min / delta))
    if i0 < 1 or abs(i0 * delta - grid.r_min) > 1e-9 * delta:
        raise DomainError(
            "grid r_min is not an integer multiple of the spacing; "
            "use RadialGrid.aligned"
        )
    mu = system.reduced_mass * U_TO_ME
    n = grid.n_points
    idx = i0 + np.arange(n)
    ii = idx[:, None]
    jj = idx[None, :]
    diff = ii - jj
    coeff = 1.0 / (2.0 * mu * delta * delta)
    sign = np.where((diff & 1) == 0, 1.0, -1.0)
    with np.errstate(divide="ignore"):
        off = 2.0 / np.where(diff == 0, 1, diff) ** 2 - 2.0 / (ii + jj) ** 2
    diag_kin = math.pi**2 / 3.0 - 1.0 / (2.0 * idx.astype(float) ** 2)
    t = coeff * sign * off
    t[np.arange(n), np.arange(n)] = coeff * diag_kin

    r = grid.points
    vdiag = np.asarray(potential(r), dtype=float) / HARTREE_TO_INVCM
    nn = system.rotational_n
    if nn:
        vdiag = vdiag + nn * (nn + 1) / (2.0 * mu * r * r)
    h = t
    h[np.arange(n), np.arange(n)] += vdiag
    return h


def _count_nodes(psi):
    big = psi[np.abs(psi) > 1e-8 * np.abs(psi).max()]
    return int(np.count_nonzero(np.diff(np.sign(big)) != 0))


def solve_bound_states(h, grid, system):
    """All E < 0 eigenstates of the radial Hamiltonian as a LevelTable.

    Eigenvectors are unit-normalized (sum psi_i^2 = 1), sign-fixed so the
    first significant amplitude is positive, and labeled by node count.
    """
    w, vecs = np.linalg.eigh(h)
    states = []
    for k in range(len(w)):
        e_cm = w[k] * HARTREE_TO_INVCM
        if e_cm >= 0:
            break
        psi = vecs[:, k]
        lead = np.nonzero(np.abs(psi) > 1e-8 * np.abs(psi).max())[0][0]
        if psi[lead] < 0:
            psi = -psi
        states.append(
            BoundState(
                v=_count_nodes(psi),
                n_rot=system.rotational_n,
                energy=e_cm,
                amplitudes=psi,
            )
        )
    states.sort(key=lambda s: s.energy)
    vs = [s.v for s in states]
    if vs != list(range(len(vs))):
        raise NumericalError(f"node counts not consecutive from 0: {vs}")
    return LevelTable(system=system, states=states)


def inner_wall_radius(potential, re, depth, factor=2.0):
    """Radius on the inner wall where V reaches +factor*De, by bisection."""
    target = factor * depth
    lo = re
    step = 0.1 * re
    hi = re
    while hi - step > 1e-6:
        hi = hi - step
        if potential(hi) >= target:
            break
    else:
        raise AnalysisError("inner wall never reaches the requested height")
    lo = hi + step
    for _ in range(100):
        mid = 0.5 * (lo + hi)
        if potential(mid) >= target:
            hi = mid
        else:
            lo = mid
        if lo - hi < 1e-8:
            break
    return hi


def default_grid(potential, system, n_points=2001, r_max=None):
    """Single-shot grid heuristic: inner point where V = +2*De, outer edge
    well beyond the last outer turning point."""
    re, vmin = find_minimum(potential)
    r_min = inner_wall_radius(potential, re, -vmin)
    if r_max is None:
        r_max = max(5.0 * re, 40.0)
    return RadialGrid.aligned(r_min, r_max, n_points)


def auto_grid(potential, system, n_points=2001, tol=1e-3, max_refine=5):
    """Grid with convergence proof: starts at r_max = max(4*Re, 30 a0) and
    doubles the range (keeping the spacing) until E0 and the highest level
    move by less than tol cm^-1."""
    re, vmin = find_minimum(potential)
    r_min = inner_wall_radius(potential, re, -vmin)
    r_max = max(4.0 * re, 30.0)
    grid = RadialGrid.aligned(r_min, r_max, n_points)
    table = solve_bound_states(build_hamiltonian(potential, system, grid), grid, system)
    if not table.states:
        raise AnalysisError("no bound states on the initial grid")
    for _ in range(max_refine):
        delta = grid.spacing
        r_max2 = grid.r_max * 2.0
        n2 = int(round((r_max2 - grid.r_min) / delta)) + 1
        grid2 = RadialGrid.aligned(grid.r_min, grid.r_min + (n2 - 1) * delta, n2)
        table2 = solve_bound_states(
            build_hamiltonian(potential, system, grid2), grid2, system
        )
        de0 = abs(table2.states[0].energy - table.states[0].energy)
        k = min(len(table), len(table2)) - 1
        dtop = abs(table2.states[k].energy - table.states[k].energy)
        if de0 < tol and dtop < tol and len(table2) == len(table):
            return grid
        grid, table = grid2, table2
    raise NumericalError(
        f"grid not converged after {max_refine} range doublings "
        f"(last dE0={de0:.2e}, dEtop={dtop:.2e} cm^-1)"
    )


@njit(cache=True)
def _numerov_sweep(f, h):
    """Outward Numerov integration of psi'' = f*psi from psi=0.

    Returns (node count, psi at the last two points). Renormalizes on
    overflow; node count is unaffected.
    """
    n = f.shape[0]
    h2 = h * h
    pm = 0.0
    pc = 1e-12
    nodes = 0
    for k in range(1, n - 1):
        num = 2.0 * pc * (1.0 + 5.0 * h2 * f[k] / 12.0) - pm * (1.0 - h2 * f[k - 1] / 12.0)
        pn = num / (1.0 - h2 * f[k + 1] / 12.0)
        if pn * pc < 0.0:
            nodes += 1
        if abs(pn) > 1e200:
            pn *= 1e-200
            pc *= 1e-200
        pm = pc
        pc = pn
    return nodes, pm, pc


@njit(cache=True)
def _numerov_psi(f, h):
    """Full outward Numerov solution (no renormalization guard)."""
    n = f.shape[0]
    h2 = h * h
    psi = np.zeros(n)
    psi[0] = 0.0
    psi[1] = 1e-12
    for k in range(1, n - 1):
        num = (2.0 * psi[k] * (1.0 + 5.0 * h2 * f[k] / 12.0)
               - psi[k - 1] * (1.0 - h2 * f[k - 1] / 12.0))
        psi[k + 1] = num / (1.0 - h2 * f[k + 1] / 12.0)
    return psi


def _numerov_setup(potential, system, step):
    re, vmin = find_minimum(potential)
    r_min = inner_wall_radius(potential, re, -vmin, factor=3.0)
    r_max = max(5.0 * re, 40.0)
    n = int(math.ceil((r_max - r_min) / step)) + 1
    r = np.linspace(r_min, r_min + (n - 1) * step, n)
    v_h = np.asarray(potential(r), dtype=float) / HARTREE_TO_INVCM
    mu = system.reduced_mass * U_TO_ME
    nn = system.rotational_n
    if nn:
        v_h = v_h + nn * (nn + 1) / (2.0 * mu * r * r)
    return r, v_h, mu, vmin


def numerov_solve(potential, system, v_target, step=0.002, tol=1e-6):
    """Bound-level energy by Numerov shooting with node-count bisection.

    Independent of the DVR path: explicit outward integration on its own
    fine grid, bisected to tol cm^-1. Returns the energy in cm^-1.
    """
    r, v_h, mu, vmin = _numerov_setup(potential, system, step)
    h = r[1] - r[0]

    def nodes_at(e_cm):
        f = 2.0 * mu * (v_h - e_cm / HARTREE_TO_INVCM)
        n, _, _ = _numerov_sweep(f, h)
        return n

    e_lo = vmin * (1.0 - 1e-12)
    e_hi = -1e-9
    if nodes_at(e_hi) < v_target + 1:
        raise NotFoundError(
            f"level v={v_target} does not exist (only {nodes_at(e_hi)} bound levels)"
        )
    if nodes_at(e_lo) > v_target:
        raise NumericalError("node count at the well bottom is not zero")
    while e_hi - e_lo > tol:
        mid = 0.5 * (e_lo + e_hi)
        if nodes_at(mid) > v_target:
            e_hi = mid
        else:
            e_lo = mid
    return 0.5 * (e_lo + e_hi)


def numerov_wavefunction(potential, system, v_target, step=0.002):
    """Normalized Numerov wavefunction for level v_target.

    Outward and inward solutions joined at the outer turning point;
    normalized with trapezoidal quadrature. Returns (r, psi, energy_cm).
    """
    e_cm = numerov_solve(potential, system, v_target, step=step)
    r, v_h, mu, _ = _numerov_setup(potential, system, step)
    h = r[1] - r[0]
    f = 2.0 * mu * (v_h - e_cm / HARTREE_TO_INVCM)
    turning = np.nonzero(f < 0)[0]
    if turning.size == 0:
        raise NumericalError("no classically allowed region at the matched energy")
    m = min(int(turning[-1]) + 5, len(r) - 3)
    psi_out = _numerov_psi(f[: m + 1], h)
    psi_in_rev = _numerov_psi(f[m:][::-1], h)
    psi_in = psi_in_rev[::-1]
    if psi_in[0] == 0 or psi_out[-1] == 0:
        raise NumericalError("matching failed: zero amplitude at the join")
    psi = np.concatenate([psi_out, psi_in[1:] * (psi_out[-1] / psi_in[0])])
    norm = math.sqrt(np.trapezoid(psi * psi, r))
    psi = psi / norm
    if psi[np.nonzero(np.abs(psi) > 1e-8 * np.abs(psi).max())[0][0]] < 0:
        psi = -psi
    return r, psi, e_cm
