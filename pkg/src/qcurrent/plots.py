"""Figure rendering for scan tables.

One PNG per scan, written next to the delimited output. Plotting is an
optional side channel; nothing in the reports depends on these files.
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .report import ScanTable, SuiteReport


def render_scan_figure(scan: ScanTable, path: str) -> None:
    params = [row.param for row in scan.rows]
    values = [row.value for row in scan.rows]
    fig, ax = plt.subplots(figsize=(5.0, 3.4))
    loglog = all(p > 0 for p in params) and all(v > 0 for v in values)
    if loglog:
        ax.loglog(params, values, "o-")
    else:
        ax.semilogy(params, [max(v, 1e-300) for v in values], "o-")
    ax.set_xlabel(scan.parameter)
    ax.set_ylabel("deviation")
    title = scan.name
    if scan.slope is not None:
        title += f"  (slope {scan.slope:.3f})"
    ax.set_title(title, fontsize=10)
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)


def render_suite_figures(report: SuiteReport, out_dir: str) -> list:
    """Render every scan in the report; returns the written paths."""
    paths = []
    for scan in report.scans:
        fname = f"{report.suite}_{scan.name}.png"
        path = os.path.join(out_dir, fname)
        render_scan_figure(scan, path)
        paths.append(path)
    return paths
