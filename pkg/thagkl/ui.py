"""
Console output for the thagkl CLI: shared rich consoles, logging setup,
error panels and verification tables.

Machine-readable results (JSON, rendered polynomials) bypass rich and are
written verbatim by the CLI; everything meant for a person goes through here.
"""

import logging
from typing import Dict, Optional

from rich import box
from rich.align import Align
from rich.console import Console
from rich.logging import RichHandler
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

console = Console()
err_console = Console(stderr=True)

LOG_FORMAT = "%(message)s"


def configure_logging(verbose: bool = False):
    """Route the thagkl loggers through a RichHandler on stderr"""
    level = logging.DEBUG if verbose else logging.WARNING
    logger = logging.getLogger("thagkl")
    logger.handlers.clear()
    handler = RichHandler(console=err_console, show_path=verbose, rich_tracebacks=verbose)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logger.addHandler(handler)
    logger.setLevel(level)
    logger.propagate = False


def show_error(message: str, hint: Optional[str] = None):
    """Display an error in a red panel on stderr"""
    parts = [Text(message, style="white")]
    if hint:
        parts.append(Text(f"\n\n{hint}", style="italic yellow"))
    err_console.print(Panel(
        Text.assemble(*parts),
        title="thagkl error",
        box=box.HEAVY,
        border_style="red",
    ))


def show_settings_panel(values: Dict, path: str, overridden: Optional[set] = None):
    """Display the effective settings and where they come from"""
    overridden = overridden or set()
    lines = []
    for key, value in values.items():
        lines.append(Text(f"{key}: ", style="bold cyan"))
        note = "  (from THAG_MAX_N)" if key in overridden else ""
        lines.append(Text(f"{value}{note}\n", style="white"))
    lines.append(Text("file: ", style="bold cyan"))
    lines.append(Text(path, style="dim"))
    console.print(Panel(
        Align.left(Text.assemble(*lines)),
        title="thagkl settings",
        box=box.ROUNDED,
        border_style="bright_cyan",
    ))


def _status(passed: bool) -> Text:
    return Text("PASS", style="bold green") if passed else Text("FAIL", style="bold red")


def show_verify_table(report: Dict):
    """Summarize a verification report, one row per suite"""
    table = Table(title="thagkl verify", box=box.SIMPLE_HEAVY)
    table.add_column("suite", style="cyan")
    table.add_column("cases", justify="right")
    table.add_column("time (s)", justify="right")
    table.add_column("status", justify="center")
    for suite in report["suites"]:
        table.add_row(suite["name"], str(suite["checked"]), f"{suite.get('elapsed', 0.0):.2f}", _status(suite["passed"]))
    console.print(table)
    for suite in report["suites"]:
        for failure in suite["failures"]:
            err_console.print(Text.assemble(Text(suite["name"], style="red"), f" {failure['case']}: {failure['detail']}"))
    overall = report["summary"]["overall_status"]
    console.print(Text.assemble(Text("overall: ", style="bold"), _status(overall == "PASS")))


def show_identity_table(checks):
    """One row per series identity"""
    table = Table(title="series identities", box=box.SIMPLE_HEAVY)
    table.add_column("identity", style="cyan")
    table.add_column("statement")
    table.add_column("status", justify="center")
    for check in checks:
        table.add_row(check.name, check.description, _status(check.passed))
    console.print(table)
    for check in checks:
        if not check.passed:
            err_console.print(f"{check.name}: first difference at u^{check.cell[0]} t^{check.cell[1]}", highlight=False)


def show_ilc_summary(report):
    """Counts for an induced log-concavity sweep, plus any counterexamples"""
    label = "strong" if report.strong else "diagonal"
    console.print(Text.assemble(
        Text(f"{report.variant.upper()}-variant {label} sweep to n={report.max_n}: ", style="bold"),
        Text(f"{len(report.entries)} cases, {len(report.failures)} failures ", style="white"),
        _status(report.passed),
    ))
    for entry in report.failures:
        witness = entry.witness
        err_console.print(
            f"n={entry.n} i={entry.i} j={entry.j}: coefficient {witness.coefficient} "
            f"at t^{witness.t_degree} {list(witness.bipartition.first)};{list(witness.bipartition.second)}"
            f"{' (confirmed by oracle)' if entry.confirmed else ''}",
            highlight=False,
            markup=False,
        )
