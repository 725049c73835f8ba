#!/usr/bin/env python3
"""Solve every preset on the DVR grid and compare against the embedded
published level tables.

Usage:
    python3 scripts/level_tables.py [--n-points 2001] [--preset LiSr]
"""

import argparse

import diatom as dt


def run(name, n_points):
    preset = dt.get_preset(name)
    p = preset.morse()
    grid = dt.default_grid(p, preset.system, n_points=n_points)
    table = dt.solve_bound_states(
        dt.build_hamiltonian(p, preset.system, grid), grid, preset.system
    )
    print(f"== {name} ({preset.method_label}) ==")
    print(f"levels: {len(table)} computed vs {len(preset.reference_levels)} published")
    print(f"D0 = {table.d0:.2f} cm^-1"
          + (f" (quoted {preset.d0_quoted})" if preset.d0_quoted else ""))
    report = dt.compare_levels(table, preset.reference_levels, notes=preset.notes)
    print(report.to_text())
    print()


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-points", type=int, default=2001)
    ap.add_argument("--preset", choices=dt.list_presets(), default=None,
                    help="run a single molecule (default: all)")
    args = ap.parse_args()
    names = [args.preset] if args.preset else dt.list_presets()
    for name in names:
        run(name, args.n_points)


if __name__ == "__main__":
    main()
