"""Spectroscopic constants from potentials and level tables, plus
level-table comparison reports."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .errors import AnalysisError
from .potentials import (
    MolecularConstants,
    find_minimum,
    harmonic_frequency,
    rotational_constant,
)
from .properties import dipole_at_re, vibrational_average
from .solver import build_hamiltonian, default_grid, solve_bound_states


def fit_level_constants(levels, v_fit_max=3):
    """Least-squares fit E_v = c0 + we*(v+1/2) - wexe*(v+1/2)^2.

    levels: LevelTable or sequence of (v, E) pairs. Returns (we, wexe).
    """
    pairs = _as_pairs(levels)
    pairs = [p for p in pairs if p[0] <= v_fit_max]
    if len(pairs) < 3:
        raise AnalysisError(f"need at least 3 levels for the fit, got {len(pairs)}")
    y = np.array([v + 0.5 for v, _ in pairs])
    e = np.array([ev for _, ev in pairs])
    design = np.column_stack([np.ones_like(y), y, -y * y])
    coef, *_ = np.linalg.lstsq(design, e, rcond=None)
    return float(coef[1]), float(coef[2])


def constants_from_potential(potential, system, dipole=None, n_points=2001):
    """Fill a MolecularConstants record from a potential curve.

    Solves the radial problem for d0 and the anharmonicity fit; dipole
    fields are filled only when a property curve is supplied.
    """
    re, vmin = find_minimum(potential)
    de = -vmin
    we = harmonic_frequency(potential, re, system.reduced_mass)
    be = rotational_constant(re, system.reduced_mass)

    grid = default_grid(potential, system, n_points=n_points)
    table = solve_bound_states(
        build_hamiltonian(potential, system, grid), grid, system
    )
    if not table.states:
        raise AnalysisError("potential supports no bound states")
    d0 = table.d0
    _, wexe = fit_level_constants(table)

    de_dip = d_avg = None
    if dipole is not None:
        de_dip = dipole_at_re(dipole, re)
        d_avg = vibrational_average(dipole, table.states[0], grid)

    return MolecularConstants(
        re=re, we=we, wexe=wexe, be=be, de=de, d0=d0,
        de_dipole=de_dip, d_avg_v0=d_avg,
    )


def _as_pairs(levels):
    if hasattr(levels, "states"):
        return [(s.v, s.energy) for s in levels.states]
    return [(int(v), float(e)) for v, e in levels]


@dataclass
class LevelComparison:
    """Per-level deviation report; pure data, no pass/fail judgment."""

    entries: list  # (v, e_computed, e_reference, delta)
    max_abs_dev: float
    mean_abs_dev: float
    n_computed: int
    n_reference: int
    notes: list = field(default_factory=list)

    @property
    def count_difference(self):
        return self.n_computed - self.n_reference

    def to_dict(self):
        return {
            "levels": [
                {"v": v, "computed": c, "reference": r, "delta": d}
                for v, c, r, d in self.entries
            ],
            "max_abs_dev": self.max_abs_dev,
            "mean_abs_dev": self.mean_abs_dev,
            "n_computed": self.n_computed,
            "n_reference": self.n_reference,
            "count_difference": self.count_difference,
            "notes": list(self.notes),
        }

    def to_json(self, indent=2):
        return json.dumps(self.to_dict(), indent=indent)

    def to_text(self):
        lines = [f"{'v':>3} {'computed':>12} {'reference':>12} {'delta':>10}"]
        for v, c, r, d in self.entries:
            lines.append(f"{v:>3} {c:>12.4f} {r:>12.2f} {d:>+10.4f}")
        lines.append(
            f"levels: {self.n_computed} computed vs {self.n_reference} reference "
            f"(diff {self.count_difference:+d})"
        )
        lines.append(
            f"deviation: max {self.max_abs_dev:.4f}, mean {self.mean_abs_dev:.4f} cm^-1"
        )
        for note in self.notes:
            lines.append(f"note: {note}")
        return "\n".join(lines)


def compare_levels(computed, reference, notes=()):
    """Align two level sets by v index and report energy deviations."""
    comp = dict(_as_pairs(computed))
    ref = dict(_as_pairs(reference))
    if not comp or not ref:
        raise AnalysisError("both level sets must be nonempty")
    overlap = sorted(set(comp) & set(ref))
    entries = [(v, comp[v], ref[v], comp[v] - ref[v]) for v in overlap]
    devs = np.array([abs(d) for *_, d in entries]) if entries else np.array([0.0])
    return LevelComparison(
        entries=entries,
        max_abs_dev=float(devs.max()),
        mean_abs_dev=float(devs.mean()),
        n_computed=len(comp),
        n_reference=len(ref),
        notes=list(notes),
    )
