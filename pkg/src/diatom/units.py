"""Physical constants, unit conversion, isotope masses, reduced mass.

Working convention: Hamiltonians are assembled in atomic units
(hartree, bohr, electron mass); every public interface speaks
cm^-1 for energies, a0 for lengths and u for masses.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConfigError, DomainError

# CODATA hartree -> cm^-1
HARTREE_TO_INVCM = 219474.6313632
# Bohr radius in nm
BOHR_TO_NM = 0.0529177
# atomic mass unit in electron masses
U_TO_ME = 1822.888486

# Atomic masses in u, AME2020 atomic mass evaluation
# (Wang et al., Chin. Phys. C 45, 030003 (2021)), rounded to 1e-7 u.
ISOTOPE_MASSES = {
    "7Li": 7.0160034,
    "9Be": 9.0121831,
    "24Mg": 23.9850417,
    "40Ca": 39.9625909,
    "88Sr": 87.9056125,
    "172Yb": 171.9363859,
}

# unit -> (dimension, factor to base unit of that dimension)
# bases: hartree (energy), a0 (length), u (mass)
_UNIT_TABLE = {
    "hartree": ("energy", 1.0),
    "cm-1": ("energy", 1.0 / HARTREE_TO_INVCM),
    "a0": ("length", 1.0),
    "nm": ("length", 1.0 / BOHR_TO_NM),
    "u": ("mass", 1.0),
    "me": ("mass", 1.0 / U_TO_ME),
}

_ALIASES = {
    "cm^-1": "cm-1",
    "1/cm": "cm-1",
    "wavenumber": "cm-1",
    "bohr": "a0",
    "amu": "u",
    "dalton": "u",
    "electron-mass": "me",
    "electron_mass": "me",
}


def _lookup(unit):
    key = _ALIASES.get(unit, unit)
    if key not in _UNIT_TABLE:
        raise ConfigError(f"unknown unit {unit!r}; known: {sorted(_UNIT_TABLE)}")
    return _UNIT_TABLE[key]


def convert(value, from_unit, to_unit):
    """Exact multiplicative unit conversion within one dimension group."""
    dim_f, fac_f = _lookup(from_unit)
    dim_t, fac_t = _lookup(to_unit)
    if dim_f != dim_t:
        raise ConfigError(
            f"cannot convert {from_unit!r} ({dim_f}) to {to_unit!r} ({dim_t})"
        )
    return value * (fac_f / fac_t)


def reduced_mass(m_a, m_b):
    """Two-body reduced mass m_a*m_b/(m_a+m_b); inputs and result in u."""
    if m_a <= 0 or m_b <= 0:
        raise DomainError(f"masses must be positive, got {m_a}, {m_b}")
    return m_a * m_b / (m_a + m_b)


@dataclass(frozen=True)
class IsotopeSpecies:
    element_symbol: str
    mass_number: int
    mass: float  # u

    def __post_init__(self):
        if self.mass <= 0:
            raise DomainError(f"isotope mass must be positive, got {self.mass}")
        if abs(self.mass - self.mass_number) > 0.2 * self.mass_number:
            raise DomainError(
                f"mass {self.mass} u inconsistent with mass number {self.mass_number}"
            )

    @classmethod
    def from_label(cls, label):
        """Build from a label like '7Li' using the embedded mass table."""
        if label not in ISOTOPE_MASSES:
            raise ConfigError(f"unknown isotope {label!r}; known: {sorted(ISOTOPE_MASSES)}")
        digits = "".join(c for c in label if c.isdigit())
        symbol = label[len(digits):]
        return cls(symbol, int(digits), ISOTOPE_MASSES[label])


@dataclass(frozen=True)
class DiatomSystem:
    atom_a: IsotopeSpecies
    atom_b: IsotopeSpecies
    rotational_n: int = 0

    def __post_init__(self):
        if self.rotational_n < 0:
            raise DomainError("rotational quantum number N must be >= 0")

    @property
    def reduced_mass(self):
        """Reduced mass in u, always derived from the stored masses."""
        return reduced_mass(self.atom_a.mass, self.atom_b.mass)

    @classmethod
    def from_labels(cls, label_a, label_b, rotational_n=0):
        return cls(
            IsotopeSpecies.from_label(label_a),
            IsotopeSpecies.from_label(label_b),
            rotational_n,
        )

    @classmethod
    def from_masses(cls, m_a, m_b, rotational_n=0):
        """Generic system from raw masses in u (element symbols unknown)."""
        a = IsotopeSpecies("X", max(1, round(m_a)), m_a)
        b = IsotopeSpecies("X", max(1, round(m_b)), m_b)
        return cls(a, b, rotational_n)


def constants_dump():
    """All embedded constants as a plain dict (for the CLI audit command)."""
    return {
        "hartree_to_invcm": HARTREE_TO_INVCM,
        "bohr_to_nm": BOHR_TO_NM,
        "u_to_electron_mass": U_TO_ME,
        "isotope_masses_u": dict(ISOTOPE_MASSES),
        "mass_source": "AME2020 atomic mass evaluation, atomic (not nuclear) masses",
    }
