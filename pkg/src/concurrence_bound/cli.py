"""Command-line interface.

Exit codes: 0 success, 1 selftest failure, 2 usage or input error.
"""

import argparse
import csv
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import states
from .concurrence import analyze
from .errors import ConcurrenceBoundError
from .io import CSV_COLUMNS, csv_fields, load_state, save_state, write_report
from .selftest import all_passed, format_table, run_checks

EXIT_OK = 0
EXIT_SELFTEST_FAILED = 1
EXIT_USAGE = 2

STATE_FAMILIES = ("isotropic", "horodecki", "tiles", "pyramid", "mes")

#: family -> (parameter name, domain)
SWEEP_FAMILIES = {
    "isotropic": ("fidelity", (0.0, 1.0)),
    "horodecki": ("alpha", (2.0, 5.0)),
}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class SweepSpec:
    """A one-parameter sweep over a catalog family.

    The range is clipped to the family's domain. Grid points are
    ``start + k * step``; the last point is ``stop`` itself, appended if the
    step does not divide the range.
    """

    family: str
    start: float
    stop: float
    step: float
    d: int = 3

    def __post_init__(self):
        if self.family not in SWEEP_FAMILIES:
            raise UsageError(f"unknown sweep family {self.family!r}")
        if not self.step > 0.0:
            raise UsageError("--step must be positive")
        if self.start > self.stop:
            raise UsageError("--start must not exceed --stop")
        if self.family == "isotropic" and self.d < 2:
            raise UsageError("--d must be at least 2")
        lo, hi = SWEEP_FAMILIES[self.family][1]
        start, stop = max(self.start, lo), min(self.stop, hi)
        if start > stop:
            raise UsageError(f"range is empty after clipping to the {self.family} domain [{lo:g}, {hi:g}]")
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "stop", stop)

    @property
    def parameter(self):
        return SWEEP_FAMILIES[self.family][0]

    def grid(self):
        span = self.stop - self.start
        count = int(span / self.step + 1e-9)
        points = [round(self.start + k * self.step, 12) for k in range(count + 1)]
        if self.stop - points[-1] > 1e-9 * max(1.0, abs(self.stop)):
            points.append(self.stop)
        else:
            points[-1] = self.stop
        return points

    def state(self, value):
        if self.family == "isotropic":
            return states.isotropic(self.d, value)
        return states.horodecki_3x3(value)


def build_state(family, d=None, fidelity=None, alpha=None):
    """Catalog state for ``state`` subcommand arguments."""
    def need(name, value):
        if value is None:
            raise UsageError(f"family {family!r} requires --{name}")
        return value

    if family == "isotropic":
        return states.isotropic(need("d", d), need("fidelity", fidelity))
    if family == "horodecki":
        return states.horodecki_3x3(need("alpha", alpha))
    if family == "mes":
        return states.density_from_pure(states.maximally_entangled(need("d", d)))
    if family == "tiles":
        return states.tiles_upb()
    if family == "pyramid":
        return states.pyramid_upb()
    raise UsageError(f"unknown family {family!r}; choose from {', '.join(STATE_FAMILIES)}")


def cmd_analyze(args):
    rho = load_state(args.file)
    label = args.label or Path(args.file).stem
    fmt = "csv-row" if args.format == "csv" else args.format
    print(write_report(analyze(rho, label=label), fmt))
    return EXIT_OK


def cmd_state(args):
    rho = build_state(args.family, d=args.d, fidelity=args.fidelity, alpha=args.alpha)
    save_state(rho, args.out)
    return EXIT_OK


def sweep_rows(spec, jobs=1):
    """One list of CSV fields per grid point, in ascending parameter order."""
    def row(value):
        report = analyze(spec.state(value), label=spec.family)
        return [format(value, ".12g")] + csv_fields(report)

    grid = spec.grid()
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(row, grid))
    return [row(v) for v in grid]


def cmd_sweep(args):
    spec = SweepSpec(args.family, args.start, args.stop, args.step, d=args.d if args.d is not None else 3)
    rows = sweep_rows(spec, jobs=args.jobs)
    with open(args.out, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow([spec.parameter, *CSV_COLUMNS])
        writer.writerows(rows)
    return EXIT_OK


def cmd_selftest(args):
    checks = run_checks()
    print(format_table(checks))
    if all_passed(checks):
        print("selftest: all checks passed")
        return EXIT_OK
    failed = ", ".join(c.name for c in checks if not c.passed)
    print(f"selftest: FAILED: {failed}", file=sys.stderr)
    return EXIT_SELFTEST_FAILED


def build_parser():
    parser = argparse.ArgumentParser(
        prog="concurrence-bound",
        description="Concurrence lower bounds from PPT and realignment trace norms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="report scores and the concurrence bound of a state file")
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "csv", "structured"), default="text")
    p.add_argument("--label", help="label for the report (default: file stem)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("state", help="write a catalog state to a state file")
    p.add_argument("family", choices=STATE_FAMILIES)
    p.add_argument("--d", type=int)
    p.add_argument("--fidelity", type=float)
    p.add_argument("--alpha", type=float)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_state)

    p = sub.add_parser("sweep", help="tabulate a parameter family to CSV")
    p.add_argument("family", choices=tuple(SWEEP_FAMILIES))
    p.add_argument("--start", type=float, required=True)
    p.add_argument("--stop", type=float, required=True)
    p.add_argument("--step", type=float, required=True)
    p.add_argument("--d", type=int, help="local dimension for the isotropic family (default 3)")
    p.add_argument("--jobs", type=int, default=1, help="worker threads for grid evaluation")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("selftest", help="check the published example values")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, ConcurrenceBoundError, OSError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        if isinstance(exc, UsageError):
            print(f"see '{parser.prog} {args.command} --help'", file=sys.stderr)
        return EXIT_USAGE
