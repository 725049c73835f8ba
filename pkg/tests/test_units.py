import math

import pytest
from hypothesis import given, strategies as st

import diatom as dt
from diatom.errors import ConfigError, DomainError
from diatom.units import ISOTOPE_MASSES, IsotopeSpecies


def test_reduced_mass_symmetry_trivial():
    assert dt.reduced_mass(1.0, 1.0) == 0.5


def test_reduced_mass_libe():
    # 7Li + 9Be from the embedded mass table; expected value recomputed
    # directly as m_a*m_b/(m_a+m_b)
    mu = dt.reduced_mass(7.0160034, 9.0121831)
    assert mu == pytest.approx(3.9448947, abs=1e-5)


def test_reduced_mass_lisr():
    mu = dt.reduced_mass(7.0160034, 87.9056125)
    assert mu == pytest.approx(6.4974250, abs=1e-5)


def test_reduced_mass_rejects_nonpositive():
    with pytest.raises(DomainError):
        dt.reduced_mass(-1.0, 2.0)
    with pytest.raises(DomainError):
        dt.reduced_mass(1.0, 0.0)


@given(st.floats(min_value=1e-3, max_value=1e3))
def test_reduced_mass_equal_masses(m):
    assert dt.reduced_mass(m, m) == pytest.approx(m / 2, rel=1e-14)


@given(
    st.floats(min_value=1e-3, max_value=1e3),
    st.floats(min_value=1e-3, max_value=1e3),
)
def test_reduced_mass_symmetric(ma, mb):
    assert dt.reduced_mass(ma, mb) == dt.reduced_mass(mb, ma)


def test_hartree_to_invcm():
    assert dt.convert(1.0, "hartree", "cm-1") == pytest.approx(219474.6313632, rel=1e-12)


def test_bohr_to_nm():
    assert dt.convert(1.0, "a0", "nm") == pytest.approx(0.0529177, rel=1e-12)


def test_u_to_electron_mass():
    assert dt.convert(1.0, "u", "electron-mass") == pytest.approx(1822.888486, rel=1e-12)


def test_zero_converts_to_zero():
    for a, b in [("hartree", "cm-1"), ("a0", "nm"), ("u", "me")]:
        assert dt.convert(0.0, a, b) == 0.0


def test_unknown_unit_raises():
    with pytest.raises(ConfigError):
        dt.convert(1.0, "eV", "cm-1")


def test_cross_dimension_raises():
    with pytest.raises(ConfigError):
        dt.convert(1.0, "hartree", "nm")


@given(
    st.floats(min_value=1e-6, max_value=1e6),
    st.sampled_from([("hartree", "cm-1"), ("a0", "nm"), ("u", "me")]),
)
def test_round_trip(value, pair):
    a, b = pair
    back = dt.convert(dt.convert(value, a, b), b, a)
    assert back == pytest.approx(value, rel=1e-12)


def test_isotope_table_complete():
    assert set(ISOTOPE_MASSES) == {"7Li", "9Be", "24Mg", "40Ca", "88Sr", "172Yb"}
    for label, mass in ISOTOPE_MASSES.items():
        sp = IsotopeSpecies.from_label(label)
        assert sp.mass == mass
        assert abs(sp.mass - sp.mass_number) < 0.2 * sp.mass_number


def test_isotope_mass_sanity():
    with pytest.raises(DomainError):
        IsotopeSpecies("X", 10, 20.0)  # 100% off the mass number
    with pytest.raises(DomainError):
        IsotopeSpecies("X", 10, -1.0)


def test_system_reduced_mass_derived_from_masses():
    sys = dt.DiatomSystem.from_labels("7Li", "88Sr")
    expect = dt.reduced_mass(ISOTOPE_MASSES["7Li"], ISOTOPE_MASSES["88Sr"])
    assert sys.reduced_mass == expect
    assert sys.rotational_n == 0


def test_system_rejects_negative_n():
    with pytest.raises(DomainError):
        dt.DiatomSystem.from_labels("7Li", "9Be", rotational_n=-1)
