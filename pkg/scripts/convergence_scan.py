#!/usr/bin/env python3
"""Grid-convergence study: E0 as a function of the number of DVR points
for one preset, at fixed radial range.

Usage:
    python3 scripts/convergence_scan.py --preset LiSr
"""

import argparse

import diatom as dt


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--preset", choices=dt.list_presets(), default="LiSr")
    args = ap.parse_args()

    preset = dt.get_preset(args.preset)
    p = preset.morse()
    print(f"{'n_points':>8} {'spacing (a0)':>13} {'E0 (cm^-1)':>14} {'shift':>11}")
    prev = None
    for n in (501, 1001, 2001, 4001):
        grid = dt.default_grid(p, preset.system, n_points=n)
        table = dt.solve_bound_states(
            dt.build_hamiltonian(p, preset.system, grid), grid, preset.system
        )
        e0 = table.states[0].energy
        shift = "" if prev is None else f"{abs(e0 - prev):11.2e}"
        print(f"{n:>8} {grid.spacing:>13.5f} {e0:>14.6f} {shift:>11}")
        prev = e0


if __name__ == "__main__":
    main()
