"""Command-line driver.

Subcommands map one-to-one onto the verification suites; `report-all` runs
everything and writes a single combined JSON document.  Flags override config
file values, which override the built-in defaults.  Exit codes: 0 all checks
passed, 1 at least one check failed, 2 configuration error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import __version__
from .config import RunConfig
from .errors import ConfigError
from .report import SuiteReport, report_json, write_checks_csv, write_scan_csv
from .suites import SUITES, report_all

COMMANDS = ("verify-algebra", "verify-cocycle", "verify-rep", "highest-weight",
            "report-all")


def _add_common(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--config", metavar="PATH", default=None,
                    help="JSON config file; flags given here override it")
    sp.add_argument("--q", type=float, default=None,
                    help="deformation parameter (also collapses the q grid to this value)")
    sp.add_argument("--spin-max", type=float, default=None, dest="spin_max",
                    help="largest spin j swept by the algebra suite")
    sp.add_argument("--degree", type=int, default=None, dest="bergman_degree",
                    help="polynomial truncation degree N")
    sp.add_argument("--radial-order", type=int, default=None, dest="radial_order")
    sp.add_argument("--angular-order", type=int, default=None, dest="angular_order")
    sp.add_argument("--fd-step", type=float, default=None, dest="fd_step",
                    help="finite-difference step for the derivative checks")
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--out", metavar="DIR", default=None, dest="out_dir",
                    help="output directory for reports (default: reports)")
    sp.add_argument("--format", choices=("json", "csv", "both"), default=None)
    sp.add_argument("--plots", action=argparse.BooleanOptionalAction, default=None,
                    help="render one PNG per scan next to the reports")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qcurrent",
        description="Verification suites for a q-deformed current algebra "
                    "and its coherent-state representation.")
    ap.add_argument("--version", action="version", version=f"qcurrent {__version__}")
    sub = ap.add_subparsers(dest="command", required=True, metavar="COMMAND")
    helps = {
        "verify-algebra": "commutator residuals and classical-limit scans",
        "verify-cocycle": "cocycle identity, homomorphism and unitarity checks",
        "verify-rep": "isometry, derivative-consistency and dense cross-checks",
        "highest-weight": "highest-weight structure of the vacuum vector",
        "report-all": "run every suite and write one combined report",
    }
    for name in COMMANDS:
        _add_common(sub.add_parser(name, help=helps[name]))
    return ap


def load_config(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig.from_file(args.config) if args.config else RunConfig()
    overrides = {key: getattr(args, key) for key in
                 ("q", "spin_max", "bergman_degree", "radial_order",
                  "angular_order", "fd_step", "seed", "out_dir", "format",
                  "plots")}
    cfg = cfg.with_overrides(**overrides)
    cfg.validate()
    return cfg


def _print_check(suite: str, c) -> None:
    if c.tolerance is None:
        val = c.value if c.value is not None else c.residual
        print(f"  [info] {suite}: {c.name} = {val}")
        return
    status = "pass" if c.passed else "FAIL"
    line = f"  [{status}] {suite}: {c.name}  residual={c.residual:.6e}  tol={c.tolerance:g}"
    if c.tail_bound is not None:
        line += f"  tail={c.tail_bound:.3e}"
    print(line)


def _print_scan(suite: str, s) -> None:
    status = "pass" if s.passed else "FAIL"
    gate = []
    if s.slope is not None:
        gate.append(f"slope={s.slope:.4f}")
    if s.slope_target is not None:
        gate.append(f"target={s.slope_target:g}±{s.slope_tol:g}")
    if s.monotone_decreasing is not None:
        gate.append(f"monotone={'yes' if s.monotone_decreasing else 'NO'}")
    print(f"  [{status}] {suite}: scan {s.name} ({', '.join(gate) or 'informational'})")


def write_outputs(reports: list, cfg: RunConfig, combined: bool) -> list:
    """Writes JSON/CSV (and figures) per config; returns written paths."""
    os.makedirs(cfg.out_dir, exist_ok=True)
    written = []
    if cfg.plots:
        from .plots import render_suite_figures  # matplotlib import kept off the fast path
        for rep in reports:
            figs = render_suite_figures(rep, cfg.out_dir)
            rep.figures = [os.path.basename(p) for p in figs]
            written.extend(figs)
    if cfg.format in ("json", "both"):
        name = "report.json" if combined else f"{reports[0].suite}.json"
        path = os.path.join(cfg.out_dir, name)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(report_json(reports, __version__))
        written.append(path)
    if cfg.format in ("csv", "both"):
        for rep in reports:
            path = os.path.join(cfg.out_dir, f"{rep.suite}_checks.csv")
            write_checks_csv(rep, path)
            written.append(path)
            for scan in rep.scans:
                path = os.path.join(cfg.out_dir, f"{rep.suite}_{scan.name}.csv")
                write_scan_csv(scan, path)
                written.append(path)
    return written


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args)
    except ConfigError as exc:
        print(f"qcurrent: configuration error: {exc}", file=sys.stderr)
        return 2

    if args.command == "report-all":
        reports = report_all(cfg)
    else:
        reports = [SUITES[args.command](cfg)]

    for rep in reports:
        print(f"{rep.suite} ({len(rep.checks)} checks, {len(rep.scans)} scans, "
              f"{rep.elapsed_s:.2f}s)")
        for c in rep.checks:
            _print_check(rep.suite, c)
        for s in rep.scans:
            _print_scan(rep.suite, s)

    written = write_outputs(reports, cfg, combined=(args.command == "report-all"))
    for path in written:
        print(f"wrote {path}")

    ok = all(rep.passed for rep in reports)
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
