#!/usr/bin/env python3
"""Recompute the spectroscopic-constants summary from the Morse models and
print it next to the embedded published values.

Usage:
    python3 scripts/constants_table.py [--n-points 1001]
"""

import argparse

import diatom as dt


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-points", type=int, default=1001)
    args = ap.parse_args()

    header = (f"{'molecule':<8} {'Re (a0)':>9} {'we':>8} {'wexe':>7} "
              f"{'Be':>8} {'De':>9} {'D0':>9}")
    print(header)
    print("-" * len(header))
    for name in dt.list_presets():
        preset = dt.get_preset(name)
        c = dt.constants_from_potential(preset.morse(), preset.system,
                                        n_points=args.n_points)
        print(f"{name:<8} {c.re:>9.4f} {c.we:>8.2f} {c.wexe:>7.3f} "
              f"{c.be:>8.4f} {c.de:>9.1f} {c.d0:>9.2f}")
        ref = preset.constants
        print(f"{'  (pub)':<8} {ref.re:>9.4f} {ref.we:>8.2f} {'':>7} "
              f"{'':>8} {ref.de:>9.1f} "
              f"{preset.d0_quoted if preset.d0_quoted else float('nan'):>9.2f}")


if __name__ == "__main__":
    main()
