"""Report records and serialization.

JSON reports are byte-deterministic for a fixed config and seed except for
the single run_meta object, which holds everything volatile (timestamp and
measured runtimes) so a consumer can drop one key and diff the rest.  CSV
output carries no volatile data at all: one table per scan plus one table of
check rows, all under the header `parameter,value,residual`.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from datetime import datetime, timezone

SCHEMA_VERSION = 1
CSV_HEADER = ("parameter", "value", "residual")


@dataclass(frozen=True)
class CheckRecord:
    """One verified quantity.

    tolerance None marks an informational record: it is always "passed" and
    carries its number in `value` (residual may repeat it or stay None).
    tail_bound, when present, is the analytic truncation allowance attached
    to the residual.
    """

    name: str
    residual: float | None
    tolerance: float | None
    passed: bool
    runtime_s: float | None = None
    tail_bound: float | None = None
    value: object = None
    details: dict | None = None


def check(name: str, residual: float, tolerance: float, *, runtime_s=None,
          tail_bound=None, value=None, details=None) -> CheckRecord:
    return CheckRecord(name=name, residual=float(residual), tolerance=float(tolerance),
                       passed=bool(residual <= tolerance), runtime_s=runtime_s,
                       tail_bound=tail_bound, value=value, details=details)


def info(name: str, value, *, residual=None, runtime_s=None, details=None) -> CheckRecord:
    return CheckRecord(name=name, residual=residual, tolerance=None, passed=True,
                       runtime_s=runtime_s, value=value, details=details)


@dataclass(frozen=True)
class ScanRow:
    param: float
    value: float
    residual: float | None = None


@dataclass(frozen=True)
class ScanTable:
    """A parameter sweep, optionally gated on its fitted log-log slope or on
    monotone decrease of the value column."""

    name: str
    parameter: str
    rows: tuple
    slope: float | None = None
    slope_target: float | None = None
    slope_tol: float | None = None
    monotone_decreasing: bool | None = None

    @property
    def passed(self) -> bool:
        ok = True
        if self.slope_target is not None:
            ok = ok and abs(self.slope - self.slope_target) <= self.slope_tol
        if self.monotone_decreasing is not None:
            ok = ok and self.monotone_decreasing
        return ok


@dataclass
class SuiteReport:
    suite: str
    config: dict
    checks: list = field(default_factory=list)
    scans: list = field(default_factory=list)
    figures: list = field(default_factory=list)
    elapsed_s: float | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks) and all(s.passed for s in self.scans)


def _json_value(v):
    if isinstance(v, complex):
        return {"im": v.imag, "re": v.real}
    return v


def _check_dict(c: CheckRecord) -> dict:
    return {
        "name": c.name,
        "passed": c.passed,
        "residual": c.residual,
        "tail_bound": c.tail_bound,
        "tolerance": c.tolerance,
        "value": _json_value(c.value),
        "details": c.details,
    }


def _scan_dict(s: ScanTable) -> dict:
    return {
        "name": s.name,
        "parameter": s.parameter,
        "passed": s.passed,
        "slope": s.slope,
        "slope_target": s.slope_target,
        "slope_tol": s.slope_tol,
        "monotone_decreasing": s.monotone_decreasing,
        "rows": [{"param": r.param, "value": r.value, "residual": r.residual}
                 for r in s.rows],
    }


def _run_meta(reports) -> dict:
    runtimes = {}
    for rep in reports:
        for c in rep.checks:
            if c.runtime_s is not None:
                runtimes[f"{rep.suite}.{c.name}"] = c.runtime_s
        if rep.elapsed_s is not None:
            runtimes[rep.suite] = rep.elapsed_s
    return {
        "check_runtimes_s": runtimes,
        "generated_at": datetime.now(timezone.utc).isoformat(),
    }


def suite_dict(rep: SuiteReport) -> dict:
    return {
        "checks": [_check_dict(c) for c in rep.checks],
        "config": rep.config,
        "figures": list(rep.figures),
        "passed": rep.passed,
        "scans": [_scan_dict(s) for s in rep.scans],
        "suite": rep.suite,
    }


def report_json(reports: list, tool_version: str) -> str:
    """Single JSON document for one suite or a combined run."""
    if len(reports) == 1:
        body = suite_dict(reports[0])
    else:
        body = {
            "passed": all(r.passed for r in reports),
            "suites": [suite_dict(r) for r in reports],
        }
    body["schema_version"] = SCHEMA_VERSION
    body["tool"] = {"name": "qcurrent", "version": tool_version}
    body["run_meta"] = _run_meta(reports)
    return json.dumps(body, indent=2, sort_keys=True, allow_nan=True) + "\n"


def _csv_value(v) -> str:
    if v is None:
        return ""
    if isinstance(v, complex):
        return repr(v)
    if isinstance(v, float):
        return repr(v)
    return str(v)


def write_checks_csv(rep: SuiteReport, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(CSV_HEADER)
        for c in rep.checks:
            value = c.value if c.value is not None else c.residual
            w.writerow([c.name, _csv_value(value), _csv_value(c.residual)])


def write_scan_csv(scan: ScanTable, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(CSV_HEADER)
        for r in scan.rows:
            w.writerow([f"{scan.parameter}={r.param:g}", _csv_value(r.value),
                        _csv_value(r.residual)])
        if scan.slope is not None:
            w.writerow([f"{scan.name}.slope", _csv_value(scan.slope), ""])
