"""Command-line interface.

Each subcommand exposes one computation and writes CSV (default) or JSON.
Output is deterministic: identical inputs give byte-identical files, and
every file header records the full logical parameter set so a run can be
reproduced from its own output. Sweep subcommands also render a PNG figure
next to the output file unless --no-plot is given.
"""

from __future__ import annotations

import argparse
import configparser
import io
import math
import os
import sys
from dataclasses import replace

from . import __version__
from .constants import ATOMIC_MASS, CONSTANTS_VERSION, ELECTRON_MASS, E_CHARGE
from .core import (
    RingConfig,
    Species,
    Statistics,
    characterize_ring,
    flux_to_field,
    load_species_file,
    species_lookup,
)
from .csvio import format_value, parse_grid, write_csv, write_json
from .errors import RingModelError
from .levels import (
    diameter_sweep,
    energy_gap,
    flux_sweep,
    ground_state,
    half_integer_ladder,
    rigid_gap,
)
from .modes import mode_spectrum
from .planner import feasibility_report, quasicrystal_analysis
from .thermal import thermal_curve, thermal_curve_kelvin

_STAT_CHOICES = tuple(s.value for s in Statistics)


class _UsageError(Exception):
    """Bad argument combination; mapped to exit code 2."""


def _species_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--species", help="registered species label (default Be9+)")
    p.add_argument("--species-file", help="INI file with additional species")
    p.add_argument("--statistics", choices=_STAT_CHOICES,
                   help="override the species exchange statistics")
    p.add_argument("--mass-kg", type=float, help="custom species mass in kg")
    p.add_argument("--mass-u", type=float,
                   help="custom species neutral-atom mass in u")
    p.add_argument("--charge-e", type=float,
                   help="custom species charge in units of e")


def _out_args(p: argparse.ArgumentParser, plot: bool = False) -> None:
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    if plot:
        p.add_argument("--no-plot", action="store_true",
                       help="do not render the PNG next to the output file")


def _resolve_species(args) -> Species:
    name = args.species
    custom = (args.mass_kg is not None or args.mass_u is not None
              or args.charge_e is not None)
    if custom:
        if args.charge_e is None:
            raise _UsageError("custom species needs --charge-e")
        if (args.mass_kg is None) == (args.mass_u is None):
            raise _UsageError("give exactly one of --mass-kg / --mass-u")
        if args.statistics is None:
            raise _UsageError("custom species needs --statistics")
        if args.mass_kg is not None:
            mass = args.mass_kg
        else:
            mass = args.mass_u * ATOMIC_MASS - args.charge_e * ELECTRON_MASS
        return Species(name or "custom", mass, args.charge_e * E_CHARGE,
                       Statistics(args.statistics))
    name = name or "Be9+"
    extra = load_species_file(args.species_file) if args.species_file else {}
    sp = extra[name] if name in extra else species_lookup(name)
    if args.statistics is not None:
        sp = replace(sp, statistics=Statistics(args.statistics))
    return sp


def _field_for(b: float | None, alpha: float | None, species: Species,
               diameter: float) -> float:
    if b is not None and alpha is not None:
        raise _UsageError("give --b or --alpha, not both")
    if b is not None:
        return b
    if alpha is not None:
        return flux_to_field(species, diameter, alpha)
    raise _UsageError("one of --b or --alpha is required")


def _plot_target(args) -> str | None:
    if getattr(args, "no_plot", True) or not args.output:
        return None
    return os.path.splitext(args.output)[0] + ".png"


def _emit(args, params: dict, columns: list[str], rows) -> None:
    buf = io.StringIO()
    if args.format == "csv":
        write_csv(buf, params, columns, rows)
    else:
        write_json(buf, {"version": __version__,
                         "constants": CONSTANTS_VERSION,
                         "params": params,
                         "columns": columns,
                         "rows": [list(r) for r in rows]})
    text = buf.getvalue()
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _n1_label(n: float) -> str:
    return f"{n:g}"


def cmd_modes(args) -> int:
    spec = mode_spectrum(args.n)
    params = {"command": "modes", "n": args.n}
    columns = ["j", "omega_j"]
    rows = [(j + 1, float(w)) for j, w in enumerate(spec.frequencies)]
    _emit(args, params, columns, rows)
    if args.vectors:
        vcols = ["j", "omega_j"] + [f"c{i + 1}" for i in range(args.n)]
        vrows = [(j + 1, float(spec.frequencies[j]),
                  *(float(c) for c in spec.mode_vectors[j]))
                 for j in range(args.n)]
        with open(args.vectors, "w", newline="") as fh:
            write_csv(fh, {"command": "modes-vectors", "n": args.n},
                      vcols, vrows)
    target = _plot_target(args)
    if target:
        from . import plots
        plots.modes_figure(spec, target)
    return 0


def cmd_spectrum(args) -> int:
    species = _resolve_species(args)
    stats = species.statistics
    half = half_integer_ladder(stats, args.n)
    params = {"command": "spectrum", "species": species.name,
              "statistics": stats.value, "n": args.n}
    if args.reduced:
        if args.alpha is None:
            raise _UsageError("--alpha is required in reduced mode")
        alpha = args.alpha
        ring = None
        params["alpha"] = format_value(alpha)
    else:
        if args.d is None:
            raise _UsageError("--d is required outside --reduced")
        b = _field_for(args.b, args.alpha, species, args.d)
        ring = RingConfig(species, args.n, args.d, b)
        alpha = characterize_ring(ring).alpha
        params["d"] = format_value(args.d)
        params["b"] = format_value(b)
    params["window"] = args.window

    if half:
        base = math.floor(alpha) + 0.5
    else:
        base = float(round(alpha))
    ns = [base + k for k in range(-args.window, args.window + 1)]
    columns = ["n1", "E_over_Estar", "omega_over_omegastar"]
    rows = [(n, (n - alpha) ** 2, n - alpha) for n in ns]
    if ring is not None:
        ch = characterize_ring(ring)
        columns += ["energy_J", "omega_rad_s"]
        rows = [r + (ch.e_star * r[1], ch.omega_star * r[2]) for r in rows]

    if args.format == "json" and ring is not None:
        gs = ground_state(ring)
        obj = {"version": __version__, "params": params,
               "columns": columns, "rows": [list(r) for r in rows],
               "ground_state": {"n1": gs.level.n1, "energy_J": gs.level.energy,
                                "omega_rad_s": gs.level.omega,
                                "degenerate": gs.degenerate},
               "energy_gap_J": energy_gap(ring),
               "rigid_gap_J": rigid_gap(ring)}
        if args.output:
            with open(args.output, "w", newline="") as fh:
                write_json(fh, obj)
        else:
            write_json(sys.stdout, obj)
        return 0
    _emit(args, params, columns, rows)
    return 0


def cmd_flux_sweep(args) -> int:
    species = _resolve_species(args)
    stats = species.statistics
    alphas = parse_grid(args.alpha)
    rows = flux_sweep(alphas, stats, args.n, args.window)
    params = {"command": "flux-sweep", "species": species.name,
              "statistics": stats.value, "n": args.n,
              "window": args.window, "alpha": args.alpha}
    if args.d is not None:
        params["d"] = format_value(args.d)
    columns = (["alpha"]
               + [f"E_over_Estar_n{_n1_label(n)}"
                  for n in rows[0].quantum_numbers]
               + ["omega_gs_over_omegastar", "degenerate"])
    data = [(r.alpha, *r.energies, r.omega_gs, int(r.degenerate))
            for r in rows]
    _emit(args, params, columns, data)
    target = _plot_target(args)
    if target:
        from . import plots
        plots.flux_figure(rows, target)
    return 0


def cmd_diameter_sweep(args) -> int:
    species = _resolve_species(args)
    xs = parse_grid(args.d_over_d0)
    rows = diameter_sweep(species, args.b0, xs, args.n)
    params = {"command": "diameter-sweep", "species": species.name,
              "statistics": species.statistics.value,
              "b0": format_value(args.b0), "d_over_d0": args.d_over_d0}
    if args.n is not None:
        params["n"] = args.n
    columns = ["d_over_d0", "omega_over_omegastar0", "n1_star"]
    data = [(r.d_over_d0, r.omega_over_omegastar0, r.n1_star) for r in rows]
    _emit(args, params, columns, data)
    target = _plot_target(args)
    if target:
        from . import plots
        plots.diameter_figure(rows, target)
    return 0


def cmd_thermal(args) -> int:
    species = _resolve_species(args)
    stats = species.statistics
    if args.t_kelvin is not None:
        if args.d is None or args.n is None:
            raise _UsageError("--t-kelvin needs --n and --d (SI mode)")
        if args.alpha is not None and ":" in args.alpha:
            raise _UsageError("SI mode takes a single --alpha, not a grid")
        alpha_si = float(args.alpha) if args.alpha is not None else None
        b = _field_for(args.b, alpha_si, species, args.d)
        ring = RingConfig(species, args.n, args.d, b)
        temps = parse_grid(args.t_kelvin)
        points = thermal_curve_kelvin(ring, temps, args.halfwidth)
        params = {"command": "thermal", "species": species.name,
                  "statistics": stats.value, "n": args.n,
                  "d": format_value(args.d), "b": format_value(b),
                  "t_kelvin": args.t_kelvin}
    else:
        if args.alpha is None or args.t is None:
            raise _UsageError("reduced mode needs --alpha and --t")
        alphas = parse_grid(args.alpha)
        ts = parse_grid(args.t)
        n = args.n if args.n is not None else 1
        points = thermal_curve(alphas, ts, stats, n, args.halfwidth)
        params = {"command": "thermal", "species": species.name,
                  "statistics": stats.value, "n": n,
                  "alpha": args.alpha, "t": args.t}
    if args.halfwidth is not None:
        params["halfwidth"] = args.halfwidth
    columns = ["alpha", "T_over_Tstar", "omega_bar_over_omegastar", "Z",
               "halfwidth", "tail_bound"]
    data = [(p.alpha, p.t_over_tstar, p.omega_bar_over_omegastar,
             p.partition_function, p.truncation_halfwidth, p.tail_bound)
            for p in points]
    _emit(args, params, columns, data)
    target = _plot_target(args)
    if target:
        from . import plots
        plots.thermal_figure(points, target)
    return 0


def _plan_table(report) -> str:
    ring = report.ring
    lines = []

    def row(key, val):
        lines.append(f"{key:<24} {val}")

    row("species", ring.species.name)
    row("n_ions", ring.n_ions)
    row("diameter", f"{ring.diameter:.6e} m")
    row("b_field", f"{ring.b_field:.6e} T")
    row("alpha", f"{report.alpha:.6g}")
    row("omega_star", f"{report.omega_star:.6g} rad/s")
    row("t_star", f"{report.t_star:.6g} K")
    row("t_crystal", f"{report.t_crystal:.6g} K")
    row("waist_window", f"{report.waist_min:.6e} .. {report.waist_max:.6e} m")
    row("kick_ratio", f"{report.kick_ratio:.6g}")
    row("ramp_time_min", f"{report.ramp_time_min:.6e} s")
    row("revival_time", f"{report.revival_time:.6e} s")
    row("mark_displacement",
        f"{report.mark_displacement:.6g} rad "
        f"(wrapped {report.mark_displacement_wrapped:.6g})")
    if report.rigid_corotation_max_d is not None:
        row("corotation_max_d", f"{report.rigid_corotation_max_d:.6e} m")
    else:
        row("corotation_max_d", "undefined (no field)")
    lines.append("")
    for f in report.flags:
        status = "PASS" if f.passed else "FAIL"
        lines.append(f"{f.name:<24} {status}  {f.detail}")
    lines.append("")
    lines.append("all checks passed" if report.all_passed()
                 else "some checks FAILED")
    return "\n".join(lines) + "\n"


def cmd_plan(args) -> int:
    species = _resolve_species(args)
    b = _field_for(args.b, args.alpha, species, args.d)
    ring = RingConfig(species, args.n, args.d, b)
    report = feasibility_report(ring, args.waist, args.l, args.delta_t,
                                args.t_target, args.threshold)
    if args.format == "json":
        obj = {"version": __version__, "report": report.to_dict()}
        if args.output:
            with open(args.output, "w", newline="") as fh:
                write_json(fh, obj)
        else:
            write_json(sys.stdout, obj)
    else:
        text = _plan_table(report)
        if args.output:
            with open(args.output, "w", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    return 0


def cmd_quasicrystal(args) -> int:
    species = _resolve_species(args)
    if args.b is not None and args.alpha1 is not None:
        raise _UsageError("give --b or --alpha1, not both")
    if args.b is not None:
        b = args.b
    elif args.alpha1 is not None:
        b = flux_to_field(species, args.d1, args.alpha1)
    else:
        raise _UsageError("one of --b or --alpha1 is required")
    n2 = args.n2 if args.n2 is not None else args.n1
    ring1 = RingConfig(species, args.n1, args.d1, b)
    ring2 = RingConfig(species, n2, args.d2, b)
    qa = quasicrystal_analysis(ring1, ring2, args.q_max, args.tol)
    obj = {"version": __version__,
           "params": {"command": "quasicrystal", "species": species.name,
                      "n1": args.n1, "d1": format_value(args.d1),
                      "n2": n2, "d2": format_value(args.d2),
                      "b": format_value(b), "q_max": args.q_max,
                      "tol": format_value(args.tol)},
           "analysis": qa.to_dict()}
    if args.output:
        with open(args.output, "w", newline="") as fh:
            write_json(fh, obj)
    else:
        write_json(sys.stdout, obj)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ionring",
        description="Flux-threaded ion ring: modes, rotation levels, "
                    "thermal averages, and experiment planning.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("modes", help="normal-mode frequencies")
    p.add_argument("--n", type=int, required=True, help="ion count")
    p.add_argument("--vectors", help="also write mode vectors to this CSV")
    _out_args(p, plot=True)
    p.set_defaults(func=cmd_modes)

    p = sub.add_parser("spectrum", help="rotation levels at one flux")
    _species_args(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=float, help="ring diameter in m")
    p.add_argument("--b", type=float, help="axial field in T")
    p.add_argument("--alpha", type=float, help="normalized flux")
    p.add_argument("--window", type=int, default=2)
    p.add_argument("--reduced", action="store_true",
                   help="reduced units; no ring geometry needed")
    _out_args(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("flux-sweep", help="level family and ground sawtooth")
    _species_args(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=float, help="recorded but not used (reduced output)")
    p.add_argument("--alpha", required=True, help="flux grid start:step:stop")
    p.add_argument("--window", type=int, default=2)
    _out_args(p, plot=True)
    p.set_defaults(func=cmd_flux_sweep)

    p = sub.add_parser("diameter-sweep",
                       help="ground rotation against d/d0 at fixed field")
    _species_args(p)
    p.add_argument("--n", type=int, help="ion count (sets the fermion ladder)")
    p.add_argument("--b0", type=float, required=True,
                   help="reference field in T")
    p.add_argument("--d-over-d0", required=True,
                   help="normalized diameter grid start:step:stop")
    _out_args(p, plot=True)
    p.set_defaults(func=cmd_diameter_sweep)

    p = sub.add_parser("thermal", help="thermal-average rotation frequency")
    _species_args(p)
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=float)
    p.add_argument("--b", type=float)
    p.add_argument("--alpha", help="flux grid (reduced mode)")
    p.add_argument("--t", help="T/T* grid (reduced mode)")
    p.add_argument("--t-kelvin", help="temperature grid in K (SI mode)")
    p.add_argument("--halfwidth", type=int, help="override truncation width")
    _out_args(p, plot=True)
    p.set_defaults(func=cmd_thermal)

    p = sub.add_parser("plan", help="experiment feasibility report")
    _species_args(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=float, required=True)
    p.add_argument("--b", type=float)
    p.add_argument("--alpha", type=float)
    p.add_argument("--waist", type=float, required=True,
                   help="marking laser waist in m")
    p.add_argument("--l", type=int, default=1, help="revival order")
    p.add_argument("--delta-t", type=float, default=1.0,
                   help="marking wait time in s")
    p.add_argument("--t-target", type=float,
                   help="target temperature in K (default T*)")
    p.add_argument("--threshold", type=float, default=0.1,
                   help="pass threshold for 'much smaller' checks")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_plan)

    p = sub.add_parser("quasicrystal",
                       help="commensurability of two co-threaded rings")
    _species_args(p)
    p.add_argument("--n1", type=int, required=True)
    p.add_argument("--d1", type=float, required=True)
    p.add_argument("--n2", type=int)
    p.add_argument("--d2", type=float, required=True)
    p.add_argument("--b", type=float, help="shared axial field in T")
    p.add_argument("--alpha1", type=float,
                   help="flux of ring 1 (sets the shared field)")
    p.add_argument("--q-max", type=int, default=1000)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(func=cmd_quasicrystal)

    return parser


def _expand_config(argv: list[str]) -> list[str]:
    path = None
    rest = []
    i = 0
    while i < len(argv):
        a = argv[i]
        if a == "--config":
            if i + 1 >= len(argv):
                raise _UsageError("--config needs a file path")
            path = argv[i + 1]
            i += 2
        elif a.startswith("--config="):
            path = a.split("=", 1)[1]
            i += 1
        else:
            rest.append(a)
            i += 1
    if path is None:
        return argv
    cp = configparser.ConfigParser()
    if not cp.read(path):
        raise _UsageError(f"config file not found: {path}")
    if "run" not in cp:
        raise _UsageError(f"config file needs a [run] section: {path}")
    section = dict(cp["run"])
    sub = section.pop("subcommand", None)
    if sub is None:
        raise _UsageError("config [run] section needs subcommand=")
    tokens = [sub]
    for key, val in section.items():
        flag = "--" + key.replace("_", "-")
        if val.strip().lower() in ("true", "false"):
            if val.strip().lower() == "true":
                tokens.append(flag)
        else:
            tokens.extend([flag, val])
    # command-line tokens come last so they override config values
    return tokens + rest


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    try:
        argv = _expand_config(list(argv))
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except RingModelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
