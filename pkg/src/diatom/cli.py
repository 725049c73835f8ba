"""Command-line front end.

Subcommands: solve, constants, post (cp|ffield), plotdata, presets,
constants-dump. Exit codes: 0 success, 2 input error, 3 numerical or
analysis failure. All output is deterministic (no timestamps).
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import fileio, refdata
from .electronic import counterpoise_correct, finite_field_dipole
from .errors import (
    AnalysisError,
    ConfigError,
    DataError,
    DiatomError,
    DomainError,
    NotFoundError,
    NumericalError,
)
from .potentials import TabulatedPotential, find_minimum
from .properties import PropertyCurve
from .solver import auto_grid, build_hamiltonian, default_grid, solve_bound_states
from .spectroscopy import compare_levels, constants_from_potential
from .units import DiatomSystem, constants_dump


def _diag(args, msg):
    if not args.quiet:
        print(msg, file=sys.stderr)


def _load_config(path):
    try:
        with open(path, "r") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc


def _resolve_inputs(args):
    """Merge config file and flags (flags win) into (potential, system, extras)."""
    cfg = _load_config(args.config) if getattr(args, "config", None) else {}
    rot = args.rotational_n if args.rotational_n is not None else cfg.get("rotational_n", 0)

    preset_name = args.preset or cfg.get("preset")
    pot_file = args.potential or (
        cfg.get("potential", {}).get("file") if cfg.get("potential", {}).get("type") == "file"
        else None
    )

    if preset_name:
        preset = refdata.get_preset(preset_name, rotational_n=rot)
        return preset.morse(), preset.system, preset

    masses = cfg.get("masses_u")
    if args.mass_a is not None and args.mass_b is not None:
        masses = [args.mass_a, args.mass_b]
    if pot_file:
        if masses is None:
            raise ConfigError("--potential requires --mass-a/--mass-b or config masses_u")
        r, v = fileio.read_curve(pot_file)
        return TabulatedPotential(r, v), DiatomSystem.from_masses(*masses, rotational_n=rot), None

    pot_cfg = cfg.get("potential")
    if pot_cfg and pot_cfg.get("type") == "morse":
        if masses is None:
            raise ConfigError("morse config requires masses_u")
        from .potentials import MorsePotential

        sys_ = DiatomSystem.from_masses(*masses, rotational_n=rot)
        p = pot_cfg["params"]
        return (
            MorsePotential(de=p["de"], re=p["re"], we=p["we"],
                           reduced_mass=sys_.reduced_mass),
            sys_,
            None,
        )
    raise ConfigError("specify --preset, --potential, or a config file")


def _make_grid(args, potential, system):
    cfg = _load_config(args.config).get("grid", {}) if getattr(args, "config", None) else {}
    n = args.n_points or cfg.get("n_points") or 2001
    if args.converge_grid:
        return auto_grid(potential, system, n_points=n)
    r_max = args.r_max or cfg.get("r_max")
    grid = default_grid(potential, system, n_points=n, r_max=r_max)
    r_min = args.r_min or cfg.get("r_min")
    if r_min:
        from .solver import RadialGrid

        grid = RadialGrid.aligned(r_min, grid.r_max, n)
    return grid


def _emit(text, output):
    if output:
        with open(output, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_solve(args):
    try:
        potential, system, preset = _resolve_inputs(args)
        grid = _make_grid(args, potential, system)
    except AnalysisError:
        _diag(args, "warning: no bound states (no potential well)")
        _emit(_format_levels([], None, args.format), args.output)
        return 0
    table = solve_bound_states(build_hamiltonian(potential, system, grid), grid, system)
    if not table.states:
        _diag(args, "warning: no bound states")
        _emit(_format_levels([], None, args.format), args.output)
        return 0
    _emit(_format_levels(table.states, table.d0, args.format), args.output)
    _diag(args, f"levels: {len(table)}  D0 = {table.d0:.4f} cm^-1")
    if args.compare:
        if preset is None:
            raise ConfigError("--compare requires --preset")
        report = compare_levels(table, preset.reference_levels, notes=preset.notes)
        print(report.to_text())
    return 0


def _format_levels(states, d0, fmt):
    if fmt == "csv":
        lines = ["v,energy_cm-1"]
        lines += [f"{s.v},{s.energy:.4f}" for s in states]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        doc = {
            "levels": [{"v": s.v, "energy_cm": round(s.energy, 6)} for s in states],
            "d0_cm": round(d0, 6) if d0 is not None else None,
            "count": len(states),
        }
        return json.dumps(doc, indent=2) + "\n"
    lines = [f"{'v':>3} {'E (cm^-1)':>12}"]
    lines += [f"{s.v:>3} {s.energy:>12.4f}" for s in states]
    if d0 is not None:
        lines.append(f"D0 = {d0:.4f} cm^-1, {len(states)} levels")
    else:
        lines.append("no bound states")
    return "\n".join(lines) + "\n"


def cmd_constants(args):
    potential, system, preset = _resolve_inputs(args)
    dipole = None
    if args.dipole:
        r, d = fileio.read_curve(args.dipole)
        dipole = PropertyCurve(r=r, values=d)
    consts = constants_from_potential(
        potential, system, dipole=dipole, n_points=args.n_points or 2001
    )
    doc = consts.as_dict()
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        units = {"re": "a0", "we": "cm^-1", "wexe": "cm^-1", "be": "cm^-1",
                 "de": "cm^-1", "d0": "cm^-1", "de_dipole": "a.u.",
                 "d_avg_v0": "a.u."}
        for key, val in doc.items():
            if val is None:
                continue
            print(f"{key:>10} = {val:.6g} {units[key]}")
    return 0


def cmd_post(args):
    if args.what == "cp":
        rows = fileio.read_counterpoise(args.input)
        r, v = counterpoise_correct(rows)
        out = "".join(f"{ri:.17g} {vi:.17g}\n" for ri, vi in zip(r, v))
        _emit(out, args.output)
    else:
        scan = fileio.read_field_scan(args.input)
        dip, err = finite_field_dipole(scan)
        print(f"dipole_au = {dip:.12g}")
        print(f"richardson_error_au = {err:.6g}")
    return 0


def cmd_plotdata(args):
    import os

    potential, system, preset = _resolve_inputs(args)
    name = args.preset or "curve"
    os.makedirs(args.outdir, exist_ok=True)
    re, _ = find_minimum(potential)
    if args.what == "potential":
        lo, hi = potential.scan_range()
        r = np.unique(np.concatenate([np.linspace(max(lo, 0.55 * re), min(hi, 3.2 * re), 1500), [re]]))
        fileio.write_curve(
            os.path.join(args.outdir, f"{name}_potential.dat"),
            r, potential(r), header="R (a0)  V (cm^-1)",
        )
    else:
        if not args.dipole:
            raise ConfigError("dipole panel requires --dipole <file>")
        rd, dv = fileio.read_curve(args.dipole)
        curve = PropertyCurve(r=rd, values=dv)
        r = np.linspace(rd[0], rd[-1], 1500)
        fileio.write_curve(
            os.path.join(args.outdir, f"{name}_dipole.dat"),
            r, curve(r), header="R (a0)  d (a.u.)",
        )
    with open(os.path.join(args.outdir, f"{name}_re_marker.dat"), "w", newline="\n") as fh:
        fh.write(f"{re:.17g}\n")
    return 0


def cmd_presets(args):
    if args.action == "list":
        for name in refdata.list_presets():
            print(name)
        return 0
    preset = refdata.get_preset(args.name)
    if args.what == "levels":
        rows = preset.reference_levels
        if args.format == "json":
            print(json.dumps([{"v": v, "energy_cm": e} for v, e in rows], indent=2))
        else:
            print("v,energy_cm-1")
            for v, e in rows:
                print(f"{v},{e}")
    else:
        rows = refdata.constants_table(args.name)
        if args.format == "json":
            print(json.dumps(rows, indent=2))
        else:
            keys = ["method", "basis", "re", "we", "de", "de_dipole"]
            print(",".join(keys))
            for row in rows:
                print(",".join("" if row[k] is None else str(row[k]) for k in keys))
    return 0


def cmd_constants_dump(args):
    print(json.dumps(constants_dump(), indent=2))
    return 0


def _add_input_opts(p, dipole=False):
    p.add_argument("--preset", help="molecule preset name (see 'presets list')")
    p.add_argument("--potential", help="two-column potential file (R a0, V cm^-1)")
    p.add_argument("--config", help="JSON config file; flags override its values")
    p.add_argument("--mass-a", type=float, help="mass of atom A in u (with --potential)")
    p.add_argument("--mass-b", type=float, help="mass of atom B in u (with --potential)")
    p.add_argument("--rotational-n", type=int, default=None, dest="rotational_n",
                   help="rotational quantum number N (default 0)")
    p.add_argument("--n-points", type=int, default=None)
    p.add_argument("--r-min", type=float, default=None)
    p.add_argument("--r-max", type=float, default=None)
    p.add_argument("--converge-grid", action="store_true",
                   help="prove grid convergence by range doubling (slower)")
    if dipole:
        p.add_argument("--dipole", help="two-column dipole file (R a0, d a.u.)")


def build_parser():
    ap = argparse.ArgumentParser(prog="diatom")
    ap.add_argument("--quiet", action="store_true", help="suppress diagnostics")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute bound vibrational levels")
    _add_input_opts(p)
    p.add_argument("--format", choices=["csv", "json", "table"], default="table")
    p.add_argument("--compare", action="store_true",
                   help="compare against the preset's reference level table")
    p.add_argument("--output", help="write main output to a file")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("constants", help="derive molecular constants")
    _add_input_opts(p, dipole=True)
    p.add_argument("--format", choices=["json", "table"], default="table")
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("post", help="post-process electronic-structure scans")
    p.add_argument("what", choices=["cp", "ffield"])
    p.add_argument("input", help="cp: 4-column file; ffield: scan JSON")
    p.add_argument("--output", help="write corrected curve to a file")
    p.set_defaults(func=cmd_post)

    p = sub.add_parser("plotdata", help="emit two-column plot files")
    p.add_argument("what", choices=["potential", "dipole"])
    _add_input_opts(p, dipole=True)
    p.add_argument("--outdir", default=".")
    p.set_defaults(func=cmd_plotdata)

    p = sub.add_parser("presets", help="list or export embedded reference data")
    p.add_argument("action", choices=["list", "export"])
    p.add_argument("name", nargs="?")
    p.add_argument("--what", choices=["levels", "constants"], default="levels")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_presets)

    p = sub.add_parser("constants-dump", help="dump embedded physical constants as JSON")
    p.set_defaults(func=cmd_constants_dump)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (DataError, ConfigError, NotFoundError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NumericalError, AnalysisError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except DiatomError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
