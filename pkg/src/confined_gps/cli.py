"""Command-line front end: ``confined-gps {solve,nodes,table,scan,density}``."""

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import analytic, tables
from .degeneracy import (
    ConfinementSpec,
    FiniteBarrier,
    Numerics,
    confined_spectrum,
    delta_e_scan,
)
from .errors import ConvergenceError
from .hamiltonian import wavefunction_samples
from .potentials import Coulomb, Davidson, Harmonic, PotentialSpec

COMMANDS = ("solve", "nodes", "table", "scan", "density")
# columns copied verbatim from fixtures, never rounded
VERBATIM = {"reference"}


def _radius(text):
    value = float(text)
    if math.isnan(value) or value < 0:
        raise argparse.ArgumentTypeError("radius must be >= 0 or inf")
    return value


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="flat key=value file mirroring the flags")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--output", help="write here instead of stdout")
    common.add_argument("--digits", type=int, default=12, help="decimals for computed values")
    common.add_argument("--order", type=int, default=300, help="number of GLL intervals N")
    common.add_argument("--alpha", type=float, default=25.0)
    common.add_argument("--rmax", type=float, default=200.0)

    system = argparse.ArgumentParser(add_help=False)
    system.add_argument("--potential", choices=("harmonic", "coulomb", "davidson"), default="harmonic")
    system.add_argument("--k", type=float, default=1.0, help="force constant")
    system.add_argument("--z", type=float, default=1.0, help="nuclear charge")
    system.add_argument("--lam", type=float, default=0.0, help="Davidson lambda")
    system.add_argument("--ell", type=int, default=0)
    system.add_argument("--ra", type=_radius, default=0.0)
    system.add_argument("--rb", type=_radius, default=math.inf, help="outer wall; 'inf' for none")
    system.add_argument("--barrier-height", type=float, help="finite barrier at --rb instead of a hard wall")

    parser = argparse.ArgumentParser(prog="confined-gps", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common, system], help="confined energy levels")
    p.add_argument("--states", type=_positive_int, default=5)

    p = sub.add_parser("nodes", parents=[common], help="free oscillator radial nodes")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--ell", type=int, default=0)
    p.add_argument("--k", type=float, default=1.0)

    p = sub.add_parser("table", parents=[common], help="recompute a reference table")
    p.add_argument("number", type=int, choices=tables.TABLE_NUMBERS)

    p = sub.add_parser("scan", parents=[common], help="E(n, ell+2) - E(n+1, ell) against wall radius")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--ell", type=int, default=0)
    p.add_argument("--from", dest="r_from", type=float, default=0.8)
    p.add_argument("--to", dest="r_to", type=float, default=2.0)
    p.add_argument("--steps", type=_positive_int, default=25)

    p = sub.add_parser("density", parents=[common, system], help="radial function and density")
    p.add_argument("--n", type=int, default=0, help="radial quantum number")
    return parser


def _config_args(path):
    """Turn ``key = value`` lines into argv tokens; ``command`` is returned apart."""
    command, argv = None, []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value")
            key, value = (s.strip() for s in line.split("=", 1))
            key = key.replace("_", "-")
            if key == "command":
                command = value
            elif key == "number":
                argv.append(value)
            else:
                argv += [f"--{key}", value]
    return command, argv


def parse_args(argv):
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, rest = pre.parse_known_args(argv)
    if known.config is None:
        return build_parser().parse_args(argv)
    command, from_file = _config_args(known.config)
    if rest and rest[0] in COMMANDS:
        command, rest = rest[0], rest[1:]
    if command is None:
        raise ValueError("no command given on the command line or in the config file")
    # command-line flags come last so they override the file
    return build_parser().parse_args([command, *from_file, *rest])


def _numerics(args):
    return Numerics(order=args.order, alpha=args.alpha, r_max=args.rmax)


def _system(args):
    if args.potential == "harmonic":
        core = Harmonic(k=args.k)
    elif args.potential == "davidson":
        core = Davidson(k=args.k, lam=args.lam)
    else:
        core = Coulomb(Z=args.z)
    if args.barrier_height is not None:
        if args.ra > 0:
            raise ValueError("a finite barrier requires --ra 0")
        conf = ConfinementSpec(args.ra, args.rb, FiniteBarrier(args.barrier_height))
    else:
        conf = ConfinementSpec(args.ra, args.rb)
    spec = PotentialSpec(core)
    # barrier heights are absolute, so barrier runs stay in hartree
    coulomb_or_barrier = args.potential == "coulomb" or args.barrier_height is not None
    unit = "hartree" if coulomb_or_barrier else "hbar*omega"
    return spec, conf, unit


def cmd_solve(args):
    spec, conf, unit = _system(args)
    numerics = _numerics(args)
    spectrum, _ = confined_spectrum(spec, args.ell, conf, numerics)
    scale = spec.oscillator_unit if unit == "hbar*omega" else 1.0
    r_b = conf.outer_wall(numerics) if not isinstance(conf.wall, FiniteBarrier) else conf.r_outer
    cols = ["n", "ell", "r_a", "r_b", "energy", "unit"]
    rows = [
        dict(n=n, ell=args.ell, r_a=conf.r_inner, r_b=r_b, energy=spectrum.energy(n) / scale, unit=unit)
        for n in range(min(args.states, len(spectrum)))
    ]
    return cols, rows, {}


def cmd_nodes(args):
    nodes = analytic.iho_nodes(args.n, args.ell, args.k)
    cols = ["n", "ell", "node", "radius", "unit"]
    rows = [dict(n=args.n, ell=args.ell, node=i, radius=r, unit="bohr") for i, r in enumerate(nodes.nodes, 1)]
    return cols, rows, {"k": args.k}


def cmd_table(args):
    table = tables.build_table(args.number, _numerics(args))
    return table.columns, table.rows, dict(table.metadata)


def cmd_scan(args):
    if not 0 < args.r_from < args.r_to:
        raise ValueError("need 0 < --from < --to")
    radii = np.linspace(args.r_from, args.r_to, args.steps) if args.steps > 1 else [args.r_from]
    scan = delta_e_scan(args.ell, args.n, radii, _numerics(args))
    cols = ["r_c", "delta_e", "unit"]
    rows = [dict(r_c=r, delta_e=d, unit="hbar*omega") for r, d in scan]
    return cols, rows, {"n": args.n, "ell": args.ell, "pair": f"E({args.n},{args.ell + 2}) - E({args.n + 1},{args.ell})"}


def cmd_density(args):
    spec, conf, _ = _system(args)
    spectrum, h = confined_spectrum(spec, args.ell, conf, _numerics(args), vectors=True)
    if not 0 <= args.n < len(spectrum):
        raise ValueError("state index out of range")
    r, u, u2 = wavefunction_samples(h, spectrum.vectors[:, args.n])
    inner = r > 0
    # psi = R(r) Y_00, so 4 pi r^2 psi^2 = u^2
    cols = ["r", "psi", "density", "unit"]
    rows = [
        dict(r=ri, psi=ui / (ri * math.sqrt(4 * math.pi)), density=di, unit="bohr")
        for ri, ui, di in zip(r[inner], u[inner], u2[inner])
    ]
    return cols, rows, {"n": args.n, "ell": args.ell, "energy": spectrum.energy(args.n)}


HANDLERS = {
    "solve": cmd_solve,
    "nodes": cmd_nodes,
    "table": cmd_table,
    "scan": cmd_scan,
    "density": cmd_density,
}


def _round(value, digits, verbatim=False):
    if isinstance(value, (bool, np.bool_)) or value is None:
        return bool(value) if value is not None else None
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if verbatim or math.isinf(value):
            return value
        return round(value, digits)
    if isinstance(value, dict):
        return {k: _round(v, digits) for k, v in value.items()}
    return value


def _cell(value, digits, verbatim):
    if isinstance(value, (float, np.floating)) and not isinstance(value, bool):
        value = float(value)
        if verbatim or math.isinf(value):
            return repr(value)
        return f"{value:.{digits}f}"
    if value is None:
        return ""
    return str(value)


def render(cols, rows, metadata, fmt, digits):
    if fmt == "json":
        payload = {
            "metadata": _round(metadata, digits),
            "rows": [{c: _round(r[c], digits, c in VERBATIM) for c in cols} for r in rows],
        }
        return json.dumps(payload, indent=1, sort_keys=False) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(cols)
    for r in rows:
        writer.writerow([_cell(r[c], digits, c in VERBATIM) for c in cols])
    return buf.getvalue()


def run(argv=None):
    """Parse, dispatch and write; returns the process exit status."""
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    except (OSError, ValueError) as exc:
        print(f"confined-gps: error: {exc}", file=sys.stderr)
        return 2
    try:
        if args.digits < 0:
            raise ValueError("--digits must be non-negative")
        cols, rows, metadata = HANDLERS[args.command](args)
        metadata = {"command": args.command, **metadata}
        text = render(cols, rows, metadata, args.format, args.digits)
        if args.output:
            with open(args.output, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except (ValueError, ConvergenceError, OSError) as exc:
        print(f"confined-gps: error: {exc}", file=sys.stderr)
        return 1
    return 0


def main():
    sys.exit(run())
