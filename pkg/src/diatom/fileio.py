"""File formats: two-column curves, counterpoise scans, field scans.

Curve files are plain text with '#' comments and arbitrary whitespace
(R in a0, value in cm^-1 for potentials / a.u. for properties), or a
JSON array of [R, value] pairs. Counterpoise input is four columns
(R, E_dimer, E_A_ghost, E_B_ghost, energies in hartree) or the JSON
equivalent. Field scans are JSON only.
"""

from __future__ import annotations

import json

import numpy as np

from .electronic import CounterpoiseRow, FieldEnergyScan
from .errors import DataError


def _parse_columns(path, ncols):
    rows = []
    with open(path, "r") as fh:
        text = fh.read()
    if text.lstrip().startswith("["):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DataError(f"{path}: bad JSON: {exc}") from exc
        for i, row in enumerate(data):
            if len(row) != ncols:
                raise DataError(f"{path}: row {i} has {len(row)} values, expected {ncols}")
            rows.append([float(x) for x in row])
        return np.array(rows)
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        if len(parts) != ncols:
            raise DataError(
                f"{path}:{lineno}: expected {ncols} columns, got {len(parts)}"
            )
        try:
            rows.append([float(x) for x in parts])
        except ValueError as exc:
            raise DataError(f"{path}:{lineno}: {exc}") from exc
    if not rows:
        raise DataError(f"{path}: no data rows")
    return np.array(rows)


def read_curve(path):
    """Two-column curve file -> (R, values) arrays."""
    data = _parse_columns(path, 2)
    return data[:, 0], data[:, 1]


def write_curve(path, r, values, header=None):
    with open(path, "w", newline="\n") as fh:
        if header:
            fh.write(f"# {header}\n")
        for ri, vi in zip(r, values):
            fh.write(f"{ri:.17g} {vi:.17g}\n")


def read_counterpoise(path):
    """Four-column counterpoise file -> list of CounterpoiseRow."""
    data = _parse_columns(path, 4)
    return [CounterpoiseRow(*row) for row in data]


def read_field_scan(path):
    """Field scan JSON: {"field_step": F, "energies": {"-2": .., "-1": ..,
    "1": .., "2": .., "0": optional}} (energies in hartree)."""
    try:
        with open(path, "r") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise DataError(f"{path}: bad JSON: {exc}") from exc
    try:
        step = float(doc["field_step"])
        en = doc["energies"]
        scan = FieldEnergyScan(
            field_step=step,
            e_m2=float(en["-2"]),
            e_m1=float(en["-1"]),
            e_p1=float(en["1"]),
            e_p2=float(en["2"]),
            e_0=float(en["0"]) if "0" in en else None,
        )
    except KeyError as exc:
        raise DataError(f"{path}: missing field {exc}") from exc
    extra = set(en) - {"-2", "-1", "0", "1", "2"}
    if extra:
        raise DataError(f"{path}: unexpected stencil points {sorted(extra)}")
    return scan
