"""Embedded reference tables (vibrational levels and molecular constants)
and the five molecule presets built from them.

Data lives in data/reference_tables.json so transcription can be audited
(checksummed) independently of the code. DIATOM_DATA_DIR overrides the
embedded location.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .errors import NotFoundError
from .potentials import MolecularConstants, MorsePotential
from .units import DiatomSystem

DATA_FILENAME = "reference_tables.json"


def data_path():
    override = os.environ.get("DIATOM_DATA_DIR")
    if override:
        return os.path.join(override, DATA_FILENAME)
    return str(resources.files("diatom").joinpath("data", DATA_FILENAME))


@lru_cache(maxsize=None)
def _load():
    with open(data_path(), "r") as fh:
        return json.load(fh)


@dataclass(frozen=True)
class MoleculePreset:
    name: str
    system: DiatomSystem
    constants: MolecularConstants
    method_label: str
    reference_levels: tuple  # ((v, E_cm), ...)
    d0_quoted: float = None
    d_avg_v0_quoted: float = None
    notes: tuple = ()

    def morse(self):
        """Morse model built from the preset constants and reduced mass."""
        c = self.constants
        return MorsePotential(
            de=c.de, re=c.re, we=c.we, reduced_mass=self.system.reduced_mass
        )


def list_presets():
    """The five molecule names in fixed order."""
    return list(_load()["order"])


def get_preset(name, rotational_n=0):
    data = _load()["presets"]
    if name not in data:
        raise NotFoundError(f"unknown preset {name!r}; valid: {list_presets()}")
    entry = data[name]
    system = DiatomSystem.from_labels(*entry["isotopes"], rotational_n=rotational_n)
    c = entry["constants"]
    constants = MolecularConstants(
        re=c["re"], we=c["we"], de=c["de"], de_dipole=c["de_dipole"],
        d0=entry["d0_quoted"], d_avg_v0=entry["d_avg_v0_quoted"],
    )
    return MoleculePreset(
        name=name,
        system=system,
        constants=constants,
        method_label=entry["method_label"],
        reference_levels=tuple((int(v), float(e)) for v, e in entry["levels"]),
        d0_quoted=entry["d0_quoted"],
        d_avg_v0_quoted=entry["d_avg_v0_quoted"],
        notes=tuple(entry["notes"]),
    )


def constants_table(name):
    """All published constant rows (every method/basis) for one molecule."""
    data = _load()["presets"]
    if name not in data:
        raise NotFoundError(f"unknown preset {name!r}; valid: {list_presets()}")
    return [dict(row) for row in data[name]["constants_table"]]
