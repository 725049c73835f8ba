import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import diatom as dt
from diatom.errors import DataError
from tests.test_solver import HarmonicWell


@pytest.fixture(scope="module")
def harmonic_state():
    preset = dt.get_preset("LiMg")
    well = HarmonicWell(depth=3000.0, re=6.0, we=200.0, mu=preset.system.reduced_mass)
    grid = dt.default_grid(well, preset.system, n_points=1001)
    table = dt.solve_bound_states(
        dt.build_hamiltonian(well, preset.system, grid), grid, preset.system
    )
    return well, table, grid


class TestPropertyCurve:
    def test_tabulated_hits_data_points(self):
        curve = dt.PropertyCurve.from_points([(5.0, 0.3), (6.357, 0.440), (8.0, 0.2)])
        assert dt.dipole_at_re(curve, 6.357) == pytest.approx(0.440, abs=1e-12)

    def test_constant_extrapolation(self):
        r = np.linspace(4.0, 10.0, 8)
        curve = dt.PropertyCurve(r=r, values=0.1 * r)
        assert curve(2.0) == pytest.approx(curve(4.0))
        assert curve(50.0) == pytest.approx(curve(10.0))

    def test_polynomial_curve(self):
        curve = dt.PropertyCurve.from_polynomial([0.0, 2.0])  # 2R
        assert curve(3.0) == pytest.approx(6.0, abs=1e-12)

    def test_unordered_points_rejected(self):
        with pytest.raises(DataError):
            dt.PropertyCurve(r=np.array([1.0, 3.0, 2.0]), values=np.zeros(3))

    def test_sign_convention_tag(self):
        curve = dt.PropertyCurve.from_polynomial([1.0])
        assert "charge transfer from Li" in curve.sign_convention

    def test_dipole_at_re_out_of_range(self):
        curve = dt.PropertyCurve.from_points([(5.0, 0.3), (6.0, 0.4), (7.0, 0.2)])
        with pytest.raises(DataError):
            dt.dipole_at_re(curve, 9.0)


class TestVibrationalAverage:
    def test_constant_curve(self, harmonic_state):
        _, table, grid = harmonic_state
        curve = dt.PropertyCurve.from_polynomial([0.5])
        for s in table.states[:5]:
            assert dt.vibrational_average(curve, s, grid) == pytest.approx(0.5, abs=1e-12)

    def test_harmonic_v0_linear_dipole_gives_intercept(self, harmonic_state):
        well, table, grid = harmonic_state
        curve = dt.PropertyCurve.from_polynomial([0.7, 0.1], r_ref=well.re)
        avg = dt.vibrational_average(curve, table.states[0], grid)
        assert avg == pytest.approx(0.7, abs=1e-8)  # odd part integrates to zero

    def test_linearity(self, harmonic_state):
        _, table, grid = harmonic_state
        s = table.states[1]
        c1 = dt.PropertyCurve.from_polynomial([0.3, 0.05])
        c2 = dt.PropertyCurve.from_polynomial([-0.1, 0.02, 0.004])
        combo = dt.PropertyCurve.from_polynomial(
            [2 * 0.3 + 3 * -0.1, 2 * 0.05 + 3 * 0.02, 3 * 0.004]
        )
        lhs = dt.vibrational_average(combo, s, grid)
        rhs = 2 * dt.vibrational_average(c1, s, grid) + 3 * dt.vibrational_average(c2, s, grid)
        assert lhs == pytest.approx(rhs, abs=1e-12)

    @given(st.floats(min_value=-2.0, max_value=2.0))
    @settings(max_examples=20, deadline=None)
    def test_constant_for_random_values(self, harmonic_state, value):
        _, table, grid = harmonic_state
        curve = dt.PropertyCurve.from_polynomial([value])
        assert dt.vibrational_average(curve, table.states[0], grid) == pytest.approx(
            value, abs=1e-12
        )

    def test_v0_average_within_curve_range(self, solve_preset):
        table, grid = solve_preset("LiMg")
        p = dt.get_preset("LiMg").morse()
        curve = dt.PropertyCurve.from_polynomial([0.44, 0.1], r_ref=p.re)
        avg = dt.vibrational_average(curve, table.states[0], grid)
        # classically allowed region of v=0, widened by 1 a0
        e0 = table.states[0].energy
        rs = grid.points
        allowed = rs[np.asarray(p(rs)) <= e0]
        lo, hi = allowed[0] - 1.0, allowed[-1] + 1.0
        assert float(curve(lo)) < avg < float(curve(hi))

    def test_morse_v0_anharmonic_shift_vs_numerov(self, solve_preset):
        # positive linear slope + anharmonic stretch: <d> slightly above the
        # value at Re; cross-checked against Numerov-wavefunction quadrature
        preset = dt.get_preset("LiMg")
        p = preset.morse()
        table, grid = solve_preset("LiMg", 2001)
        curve = dt.PropertyCurve.from_polynomial([0.44, 0.1], r_ref=p.re)
        avg_dvr = dt.vibrational_average(curve, table.states[0], grid)
        assert avg_dvr > 0.44

        r, psi, _ = dt.numerov_wavefunction(p, preset.system, 0)
        avg_num = np.trapezoid(psi**2 * curve(r), r)
        assert avg_dvr == pytest.approx(avg_num, abs=1e-3)
