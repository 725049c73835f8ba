"""R-dependent property curves (dipole moments) and vibrational averaging."""

from __future__ import annotations

import numpy as np
from scipy.interpolate import CubicSpline

from .errors import DataError

# Positive dipole = charge transfer from Li toward the partner atom
# (partner at the origin, Li on the positive axis).
SIGN_CONVENTION = "positive = charge transfer from Li toward partner atom"


class PropertyCurve:
    """Scalar property vs internuclear separation.

    Tabulated curves are interpolated with a natural cubic spline and
    extrapolated as constants beyond the data ends (properties approach
    atomic-limit constants; avoids spline blow-up under wavefunction tails).
    """

    sign_convention = SIGN_CONVENTION

    def __init__(self, r=None, values=None, poly_coeffs=None, r_ref=0.0):
        if (r is None) == (poly_coeffs is None):
            raise DataError("give either tabulated (r, values) or poly_coeffs")
        if r is not None:
            r = np.asarray(r, dtype=float)
            values = np.asarray(values, dtype=float)
            if r.ndim != 1 or r.shape != values.shape or len(r) < 2:
                raise DataError("need matching 1-D arrays with >= 2 points")
            bad = np.nonzero(np.diff(r) <= 0)[0]
            if bad.size:
                raise DataError(f"R values not strictly increasing at index {bad[0] + 1}")
            self.r_data = r
            self.v_data = values
            self._spline = CubicSpline(r, values, bc_type="natural")
            self._poly = None
        else:
            self.r_data = None
            self._poly = np.polynomial.Polynomial(poly_coeffs)
            self.r_ref = r_ref

    @classmethod
    def from_points(cls, points):
        pts = np.asarray(list(points), dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 2:
            raise DataError("expected (R, value) pairs")
        return cls(r=pts[:, 0], values=pts[:, 1])

    @classmethod
    def from_polynomial(cls, coeffs, r_ref=0.0):
        """Polynomial in (R - r_ref), lowest order first."""
        return cls(poly_coeffs=coeffs, r_ref=r_ref)

    def __call__(self, r):
        r = np.asarray(r, dtype=float)
        if self._poly is not None:
            out = self._poly(r - self.r_ref)
        else:
            out = self._spline(np.clip(r, self.r_data[0], self.r_data[-1]))
        return float(out) if out.ndim == 0 else out


def vibrational_average(curve, state, grid):
    """<d>_v = sum_i psi_i^2 d(r_i): DVR diagonal quadrature, exact within
    the grid representation."""
    psi2 = state.amplitudes**2
    vals = np.asarray(curve(grid.points), dtype=float)
    if not np.all(np.isfinite(vals[psi2 > 1e-12])):
        raise DataError("property curve not evaluable where the state has support")
    return float(np.sum(psi2 * vals))


def dipole_at_re(curve, re):
    """Property value at the equilibrium separation."""
    if curve.r_data is not None and not (curve.r_data[0] <= re <= curve.r_data[-1]):
        raise DataError(
            f"R={re} outside tabulated range [{curve.r_data[0]}, {curve.r_data[-1]}]"
        )
    return float(curve(re))
