"""Command-line front end.

Subcommands: ``concurrence``, ``sweep``, ``compare``, ``prepare``, ``laguerre``.
Output is CSV (default) or JSON lines.  Exit codes: 0 ok, 1 usage,
2 degenerate state, 3 truncation insufficient, 4 regime violation.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import __version__, entanglement, fock, prep
from .errors import DegenerateState, RegimeViolation, TruncationInsufficient
from .laguerre import laguerre
from .states import SMEECS, StateSpec, default_truncation, sign_name

EXIT_OK, EXIT_USAGE, EXIT_DEGENERATE, EXIT_TRUNCATION, EXIT_REGIME = 0, 1, 2, 3, 4

SWEEP_FIELDS = (
    "family", "sign", "m", "n", "alpha_sq", "closed_form", "oracle", "abs_diff", "p1", "p2", "n_max", "status",
)
COMPARE_FIELDS = ("sign", "m", "alpha_sq", "tmeecs", "smeecs", "difference", "status")
PREPARE_FIELDS = (
    "sign", "m", "alpha_sq", "gt", "atoms", "backend",
    "fidelity", "infidelity", "success_prob", "per_atom_probs", "n_max",
)
DOMINANCE_TOL = 1e-12
NMAX_ENV = "ECSLAB_NMAX"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def fmt(value):
    """Render one output cell; floats at 12 significant digits."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".12g")
    if isinstance(value, (list, tuple)):
        return ";".join(fmt(v) for v in value)
    return str(value)


def _json_value(value):
    if isinstance(value, (float, np.floating)):
        return float(format(float(value), ".12g"))
    if isinstance(value, (list, tuple)):
        return [_json_value(v) for v in value]
    return value


class RecordWriter:
    def __init__(self, stream, fields, output_format):
        self.stream = stream
        self.fields = fields
        self.format = output_format
        if output_format == "csv":
            self._csv = csv.writer(stream, lineterminator="\n")
            self._csv.writerow(fields)

    def write(self, record):
        if self.format == "csv":
            self._csv.writerow([fmt(record.get(k)) for k in self.fields])
        else:
            row = {k: _json_value(record.get(k)) for k in self.fields}
            row["tool_version"] = __version__
            self.stream.write(json.dumps(row) + "\n")


def truncation_override():
    raw = os.environ.get(NMAX_ENV)
    if raw in (None, ""):
        return None
    try:
        return fock.TruncationConfig(int(raw))
    except ValueError as exc:
        raise UsageError(f"{NMAX_ENV}={raw!r} is not a valid cutoff: {exc}") from None


def _alpha(alpha_sq, phase):
    """Representative amplitude for the requested ``|alpha|^2``.

    ``alpha e^{i phase}`` is reached from real ``alpha`` by the local rotation
    ``exp(i phase (n_a + n_b))``, which leaves every reported quantity
    unchanged, so the real representative is used and output cannot depend
    on the phase.
    """
    if alpha_sq < 0:
        raise UsageError("--alpha-sq must be non-negative")
    if not math.isfinite(phase):
        raise UsageError("--alpha-phase must be finite")
    return math.sqrt(alpha_sq)


def _spec(args, alpha_sq):
    family = args.family.upper()
    m = args.m
    n = args.n
    if family == SMEECS:
        n = 0
    elif family == "ECS":
        m = n = 0
    try:
        return StateSpec(family, args.sign, _alpha(alpha_sq, args.alpha_phase), m, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def concurrence_record(spec, alpha_sq, trunc=None):
    """One sweep/concurrence row; raises on degenerate or truncated states."""
    trunc = trunc or default_truncation(spec)
    report = entanglement.analyze(spec, trunc)
    return {
        "family": spec.family.lower(),
        "sign": sign_name(spec.sign),
        "m": spec.m,
        "n": spec.n,
        "alpha_sq": alpha_sq,
        "closed_form": report.closed_form,
        "oracle": report.oracle,
        "abs_diff": report.abs_diff,
        "p1": report.p1,
        "p2": report.p2,
        "n_max": trunc.n_max,
        "status": "ok",
    }


def _sweep_point(spec, alpha_sq, trunc):
    try:
        return concurrence_record(spec, alpha_sq, trunc)
    except (DegenerateState, TruncationInsufficient) as exc:
        status = "degenerate" if isinstance(exc, DegenerateState) else "truncation"
        return {
            "family": spec.family.lower(),
            "sign": sign_name(spec.sign),
            "m": spec.m,
            "n": spec.n,
            "alpha_sq": alpha_sq,
            "n_max": (trunc or default_truncation(spec)).n_max,
            "status": status,
        }


def _grid(args):
    if args.alpha_sq is not None:
        grid = list(args.alpha_sq)
    else:
        start, stop, num = args.grid
        if int(num) != num or num < 1:
            raise UsageError("--grid NUM must be a positive integer")
        grid = list(np.linspace(start, stop, int(num)))
    if not grid:
        raise UsageError("empty |alpha|^2 grid")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise UsageError("|alpha|^2 grid must be strictly increasing")
    if any(v < 0 for v in grid):
        raise UsageError("|alpha|^2 values must be non-negative")
    return [float(v) for v in grid]


def cmd_concurrence(args, out):
    spec = _spec(args, args.alpha_sq)
    record = concurrence_record(spec, args.alpha_sq, truncation_override())
    RecordWriter(out, SWEEP_FIELDS, args.format).write(record)
    return EXIT_OK


def cmd_sweep(args, out):
    grid = _grid(args)
    if args.sign == "minus" and any(v <= 0 for v in grid):
        raise UsageError("minus-branch sweeps need |alpha|^2 > 0")
    specs = [_spec(args, v) for v in grid]
    trunc = truncation_override()
    writer = RecordWriter(out, SWEEP_FIELDS, args.format)
    with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
        for record in pool.map(lambda sv: _sweep_point(sv[0], sv[1], trunc), zip(specs, grid)):
            writer.write(record)
    return EXIT_OK


def compare_rows(grid, m_list, signs=("plus", "minus")):
    """Closed-form TMEECS(m, m) against SMEECS(2m) on a grid, both signs."""
    rows = []
    for sign in signs:
        for m in m_list:
            for x in grid:
                alpha = math.sqrt(x)
                row = {"sign": sign, "m": m, "alpha_sq": x}
                try:
                    t = entanglement.concurrence_tmeecs(sign, alpha, m, m)
                    s = entanglement.concurrence_smeecs(sign, alpha, 2 * m)
                except DegenerateState:
                    row["status"] = "degenerate"
                else:
                    row.update(tmeecs=t, smeecs=s, difference=t - s)
                    row["status"] = "ok" if t - s >= -DOMINANCE_TOL else "violation"
                rows.append(row)
    return rows


def compare_summary(rows):
    valid = [r for r in rows if "difference" in r]
    if not valid:
        return "# no comparable points"
    worst = min(valid, key=lambda r: r["difference"])
    violations = sum(r["status"] == "violation" for r in rows)
    return (
        f"# min_difference={fmt(worst['difference'])} at sign={worst['sign']} m={worst['m']} "
        f"alpha_sq={fmt(worst['alpha_sq'])}; violations={violations} of {len(valid)}"
    )


def cmd_compare(args, out):
    grid = _grid(args)
    if any(m < 1 for m in args.m):
        raise UsageError("--m values must be >= 1")
    rows = compare_rows(grid, args.m)
    writer = RecordWriter(out, COMPARE_FIELDS, args.format)
    for row in rows:
        writer.write(row)
    print(compare_summary(rows), file=sys.stderr)
    return EXIT_OK


def cmd_prepare(args, out):
    if args.m < 1 or args.atoms < 1:
        raise UsageError("--m and --atoms must be >= 1")
    spec = StateSpec(SMEECS, args.sign, _alpha(args.alpha_sq, args.alpha_phase), args.m)
    trunc = truncation_override() or fock.auto_truncation(spec.alpha, max(spec.m, args.atoms))
    outcome = prep.run_chain(spec, args.gt, 1.0, args.atoms, backend=args.backend, trunc=trunc)
    record = {
        "sign": args.sign,
        "m": args.m,
        "alpha_sq": args.alpha_sq,
        "gt": args.gt,
        "atoms": args.atoms,
        "backend": args.backend,
        "fidelity": outcome.fidelity_to_target,
        "infidelity": outcome.infidelity,
        "success_prob": outcome.success_prob,
        "per_atom_probs": list(outcome.per_atom_probs),
        "n_max": trunc.n_max,
    }
    RecordWriter(out, PREPARE_FIELDS, args.format).write(record)
    return EXIT_OK


def cmd_laguerre(args, out):
    out.write(fmt(float(laguerre(args.m, args.x))) + "\n")
    return EXIT_OK


def build_parser():
    parser = _Parser(prog="ecslab", description="Excited entangled coherent states: concurrence and preparation.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def state_args(p, families=("ecs", "tmeecs", "smeecs")):
        p.add_argument("--family", choices=families, required=True)
        p.add_argument("--sign", choices=("plus", "minus"), required=True)
        p.add_argument("--m", "--k", dest="m", type=int, default=0, help="photons added to mode a")
        p.add_argument("--n", type=int, default=0, help="photons added to mode b (TMEECS)")
        p.add_argument("--alpha-phase", type=float, default=0.0, help="arg(alpha); never changes results")

    def grid_args(p, default=None):
        g = p.add_mutually_exclusive_group(required=default is None)
        g.add_argument("--alpha-sq", type=float, nargs="+", help="explicit |alpha|^2 values")
        g.add_argument("--grid", type=float, nargs=3, metavar=("START", "STOP", "NUM"), help="linspace grid")
        if default is not None:
            p.set_defaults(grid=default)

    def format_arg(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("concurrence", help="closed-form and oracle concurrence of one state")
    state_args(p)
    p.add_argument("--alpha-sq", type=float, required=True)
    format_arg(p)
    p.set_defaults(func=cmd_concurrence)

    p = sub.add_parser("sweep", help="concurrence over a |alpha|^2 grid")
    state_args(p)
    grid_args(p)
    p.add_argument("--jobs", type=int, default=1, help="worker threads")
    format_arg(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("compare", help="TMEECS(m, m) against SMEECS(2m)")
    p.add_argument("--m", type=int, nargs="+", default=[1, 2, 3])
    grid_args(p, default=(0.1, 4.0, 40))
    format_arg(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("prepare", help="simulate the atom-chain preparation")
    p.add_argument("--sign", choices=("plus", "minus"), required=True)
    p.add_argument("--m", type=int, required=True, help="photons already on mode a")
    p.add_argument("--alpha-sq", type=float, required=True)
    p.add_argument("--alpha-phase", type=float, default=0.0)
    p.add_argument("--gt", type=float, required=True, help="coupling times interaction time")
    p.add_argument("--atoms", type=int, default=1)
    p.add_argument("--backend", choices=(prep.FIRST_ORDER, prep.EXACT), default=prep.FIRST_ORDER)
    format_arg(p)
    p.set_defaults(func=cmd_prepare)

    p = sub.add_parser("laguerre", help="evaluate L_m(x)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--x", type=float, required=True)
    p.set_defaults(func=cmd_laguerre)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, ValueError) as exc:
        print(f"ecslab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DegenerateState as exc:
        print(f"ecslab: degenerate state: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except TruncationInsufficient as exc:
        print(f"ecslab: truncation insufficient: {exc}", file=sys.stderr)
        return EXIT_TRUNCATION
    except RegimeViolation as exc:
        print(f"ecslab: regime violation: {exc}", file=sys.stderr)
        return EXIT_REGIME


if __name__ == "__main__":
    sys.exit(main())
