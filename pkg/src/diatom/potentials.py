"""Potential energy curves: analytic Morse models and tabulated ab initio data.

All curves are callables R (a0) -> V (cm^-1) with the dissociation
asymptote pinned at V = 0, so bound levels are strictly negative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.interpolate import CubicSpline
from scipy.optimize import minimize_scalar

from .errors import AnalysisError, DataError, DomainError
from .units import HARTREE_TO_INVCM, U_TO_ME

# finite-difference step for curvature, a0 (truncation vs rounding at cm^-1 scale)
FD_STEP = 1e-3


@dataclass(frozen=True)
class MorsePotential:
    """V(R) = De*(1 - exp(-a*(R - Re)))^2 - De with a fixed by (we, De, mu)."""

    de: float  # well depth, cm^-1
    re: float  # equilibrium separation, a0
    we: float  # harmonic constant, cm^-1
    reduced_mass: float  # u

    def __post_init__(self):
        for name in ("de", "re", "we", "reduced_mass"):
            if getattr(self, name) <= 0:
                raise DomainError(f"{name} must be positive, got {getattr(self, name)}")

    @property
    def a(self):
        """Range parameter in 1/a0, derived so that V''(Re) = mu*we^2."""
        we_h = self.we / HARTREE_TO_INVCM
        de_h = self.de / HARTREE_TO_INVCM
        mu_me = self.reduced_mass * U_TO_ME
        return we_h * math.sqrt(mu_me / (2.0 * de_h))

    def __call__(self, r):
        x = 1.0 - np.exp(-self.a * (np.asarray(r, dtype=float) - self.re))
        v = self.de * x * x - self.de
        return v if v.shape else float(v)

    def scan_range(self):
        return (max(1e-3, 0.2 * self.re), 5.0 * self.re)


def morse_levels_analytic(p: MorsePotential, v_max_request=None):
    """Closed-form Morse spectrum E_v = -De + we*(v+1/2) - (we^2/4De)*(v+1/2)^2.

    Returns (v, E_v) pairs for all bound v (E_v < 0 on the rising branch),
    i.e. v = 0 .. floor(2*De/we - 1/2).
    """
    lam = 2.0 * p.de / p.we
    v_max = math.floor(lam - 0.5)
    if v_max_request is not None:
        v_max = min(v_max, v_max_request)
    wexe = p.we * p.we / (4.0 * p.de)
    out = []
    for v in range(v_max + 1):
        y = v + 0.5
        out.append((v, -p.de + p.we * y - wexe * y * y))
    return out


class TabulatedPotential:
    """Natural cubic spline through (R, V) data, stitched C1 to an
    exponential wall A*exp(-b*R) below the data and a -C6/R^6 - C8/R^8
    dispersion tail above it."""

    def __init__(self, r, v):
        r = np.asarray(r, dtype=float)
        v = np.asarray(v, dtype=float)
        if r.ndim != 1 or r.shape != v.shape:
            raise DataError("R and V must be matching 1-D arrays")
        if len(r) < 8:
            raise DataError(f"need at least 8 points, got {len(r)}")
        bad = np.nonzero(np.diff(r) <= 0)[0]
        if bad.size:
            raise DataError(f"R values not strictly increasing at index {bad[0] + 1}")
        depth = -float(v.min())
        if depth <= 0:
            raise AnalysisError("tabulated curve has no negative minimum")
        if v[-1] >= 0:
            raise DataError(f"V at last point (index {len(v) - 1}) must be negative")
        if abs(v[-1]) >= 0.05 * depth:
            raise DataError(
                f"last point (index {len(v) - 1}) too far from the asymptote: "
                f"|V|={abs(v[-1]):.3g} vs 0.05*De={0.05 * depth:.3g} cm^-1"
            )
        self.r_data = r
        self.v_data = v
        self._spline = CubicSpline(r, v, bc_type="natural")

        # dispersion tail from value/derivative continuity at the last point
        rn, vn = r[-1], v[-1]
        dn = float(self._spline(rn, 1))
        mat = np.array([[-rn**-6, -rn**-8], [6 * rn**-7, 8 * rn**-9]])
        self.c6, self.c8 = np.linalg.solve(mat, [vn, dn])

        # exponential wall from continuity at the first point
        r0, v0 = r[0], v[0]
        d0 = float(self._spline(r0, 1))
        if v0 == 0:
            raise DataError("V at first point must be nonzero to fit the wall")
        self.wall_decay = -d0 / v0
        self.wall_amp = v0 * math.exp(self.wall_decay * r0)

    def __call__(self, r):
        r = np.asarray(r, dtype=float)
        scalar = r.ndim == 0
        r = np.atleast_1d(r)
        out = np.empty_like(r)
        lo = r < self.r_data[0]
        hi = r > self.r_data[-1]
        mid = ~(lo | hi)
        out[mid] = self._spline(r[mid])
        out[lo] = self.wall_amp * np.exp(-self.wall_decay * r[lo])
        rh = r[hi]
        out[hi] = -self.c6 / rh**6 - self.c8 / rh**8
        return float(out[0]) if scalar else out

    def scan_range(self):
        return (self.r_data[0], self.r_data[-1])


def build_tabulated(points):
    """Construct a TabulatedPotential from an iterable of (R, V) pairs."""
    pts = np.asarray(list(points), dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise DataError("expected (R, V) pairs")
    return TabulatedPotential(pts[:, 0], pts[:, 1])


def find_minimum(p, bracket=None):
    """Locate the potential minimum; returns (Re in a0, V(Re) in cm^-1)."""
    lo, hi = bracket if bracket is not None else p.scan_range()
    rs = np.linspace(lo, hi, 1024)
    vs = np.asarray(p(rs))
    k = int(np.argmin(vs))
    if vs[k] >= 0 or k == 0 or k == len(rs) - 1:
        raise AnalysisError("no interior negative minimum found (repulsive curve?)")
    res = minimize_scalar(
        p, bounds=(rs[k - 1], rs[k + 1]), method="bounded",
        options={"xatol": 1e-9},
    )
    return float(res.x), float(res.fun)


def harmonic_frequency(p, re, mu):
    """Harmonic constant we in cm^-1 from the 5-point curvature at re.

    mu is the reduced mass in u.
    """
    h = FD_STEP
    stencil = (-p(re - 2 * h) + 16 * p(re - h) - 30 * p(re)
               + 16 * p(re + h) - p(re + 2 * h))
    d2 = stencil / (12.0 * h * h)  # cm^-1 / a0^2
    if d2 <= 0:
        raise AnalysisError(f"non-positive curvature {d2:.3g} at R={re}")
    d2_h = d2 / HARTREE_TO_INVCM  # hartree / a0^2
    omega_h = math.sqrt(d2_h / (mu * U_TO_ME))
    return omega_h * HARTREE_TO_INVCM


def rotational_constant(re, mu):
    """Equilibrium rotational constant Be = hbar/(4*pi*c*mu*Re^2) in cm^-1."""
    if re <= 0 or mu <= 0:
        raise DomainError("re and mu must be positive")
    be_h = 1.0 / (2.0 * mu * U_TO_ME * re * re)
    return be_h * HARTREE_TO_INVCM


@dataclass
class MolecularConstants:
    re: float = None  # a0
    we: float = None  # cm^-1
    wexe: float = None  # cm^-1
    be: float = None  # cm^-1
    de: float = None  # cm^-1
    d0: float = None  # cm^-1
    de_dipole: float = None  # a.u. at Re
    d_avg_v0: float = None  # a.u., <d> over v=0

    def __post_init__(self):
        if self.d0 is not None and self.de is not None and self.d0 >= self.de:
            raise DomainError(f"D0={self.d0} must be below De={self.de}")
        for name in ("we", "be"):
            val = getattr(self, name)
            if val is not None and val <= 0:
                raise DomainError(f"{name} must be positive, got {val}")

    def as_dict(self):
        return {k: v for k, v in self.__dict__.items()}
