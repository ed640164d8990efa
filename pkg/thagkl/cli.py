"""
Main CLI interface for thagkl - equivariant KL polynomials of thagomizer matroids
"""

import sys
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Optional

import click
import sympy
from rapidfuzz import process

from . import __version__
from . import closed_forms as cf
from . import recursion_oracle as oracle
from .bi_ring import GradedBiSchur, dimension_poly, restrict_to_symmetric
from .config import SettingsStore
from .errors import InvalidInputError, ThagklError
from .lattice_oracle import characteristic_polynomial, inverse_kl, kl_and_z
from .positivity import VARIANTS, verify_strong_ilc
from .render import FORMATS, dumps, render_graded, render_integer_poly, validate_document
from .series import verify_series_identities
from .thagomizer_model import flats_of_cycle, flats_of_thagomizer
from .ui import configure_logging, console, show_error, show_identity_table, show_ilc_summary, show_settings_panel, show_verify_table
from .verify import SUITES, run_all

# Global instances
settings_store = SettingsStore()

EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2

THAGOMIZER_LATTICE_LIMIT = 5
CYCLE_LATTICE_LIMIT = 10


@dataclass(frozen=True)
class Family:
    """One computable polynomial family and its three routes"""

    help: str
    closed: Callable[[int], GradedBiSchur]
    oracle: Callable[[int], GradedBiSchur]
    lattice: Callable[[int], sympy.Poly]
    lattice_limit: int
    # cycles are indexed by k, which runs two past the thagomizer n
    size_slack: int = 0


def _thagomizer_kl(n: int):
    return kl_and_z(flats_of_thagomizer(n))


def _cycle_kl(k: int):
    return kl_and_z(flats_of_cycle(k))


FAMILIES = {
    "p-thag": Family(
        "B_n-equivariant KL polynomial of T_n",
        cf.p_thagomizer, oracle.p_thagomizer_oracle,
        lambda n: _thagomizer_kl(n)[0], THAGOMIZER_LATTICE_LIMIT,
    ),
    "q-thag": Family(
        "B_n-equivariant inverse KL polynomial of T_n",
        cf.q_thagomizer, oracle.q_thagomizer_oracle,
        lambda n: inverse_kl(flats_of_thagomizer(n)), THAGOMIZER_LATTICE_LIMIT,
    ),
    "z-thag": Family(
        "B_n-equivariant Z-polynomial of T_n",
        cf.z_thagomizer, oracle.z_thagomizer_oracle,
        lambda n: _thagomizer_kl(n)[1], THAGOMIZER_LATTICE_LIMIT,
    ),
    "char-thag": Family(
        "B_n-equivariant characteristic polynomial of T_n",
        cf.char_poly_thagomizer, oracle.char_poly_oracle,
        lambda n: characteristic_polynomial(flats_of_thagomizer(n)), THAGOMIZER_LATTICE_LIMIT,
    ),
    "p-cycle": Family(
        "S_k-equivariant KL polynomial of the k-cycle",
        cf.c_cycle, oracle.p_cycle_oracle,
        lambda k: _cycle_kl(k)[0], CYCLE_LATTICE_LIMIT, size_slack=2,
    ),
    "z-cycle": Family(
        "S_k-equivariant Z-polynomial of the k-cycle",
        cf.z_cycle, oracle.z_cycle_oracle,
        lambda k: _cycle_kl(k)[1], CYCLE_LATTICE_LIMIT, size_slack=2,
    ),
    "p-type-a": Family(
        "S_n-equivariant KL polynomial of T_n",
        cf.p_type_a, lambda n: restrict_to_symmetric(oracle.p_thagomizer_oracle(n)),
        lambda n: _thagomizer_kl(n)[0], THAGOMIZER_LATTICE_LIMIT,
    ),
}


@contextmanager
def handle_errors():
    """Bad input becomes a usage error (exit 2); any other library error exits 1"""
    try:
        yield
    except InvalidInputError as e:
        raise click.UsageError(str(e)) from e
    except ThagklError as e:
        show_error(str(e))
        sys.exit(EXIT_VERIFICATION_FAILED)


def check_size(n: int, name: str = "N", slack: int = 0):
    """Apply the CLI guard from settings, widened by slack"""
    limit = click.get_current_context().find_root().obj.max_n + slack
    if not 0 <= n <= limit:
        raise click.BadParameter(f"must be between 0 and {limit}", param_hint=name)


def emit(text: str, out: Optional[str]):
    """Write a result to --out or to stdout, verbatim"""
    if out:
        Path(out).write_text(text + "\n")
        console.print(f"wrote {out}", highlight=False)
    else:
        click.echo(text)


def suggest_family(name: str) -> Optional[str]:
    match = process.extractOne(name, list(FAMILIES), score_cutoff=50)
    return match[0] if match else None


@click.group()
@click.version_option(version=__version__, prog_name="thagkl")
@click.option("--verbose", "-v", is_flag=True, help="Log solver progress to stderr")
@click.pass_context
def main(ctx, verbose):
    """thagkl - exact equivariant KL polynomials of thagomizer and cycle matroids"""
    configure_logging(verbose)
    ctx.obj = settings_store.load()


def format_option(func):
    return click.option(
        "--format", "fmt", type=click.Choice(FORMATS), default=None,
        help="Output format (default from settings)",
    )(func)


def out_option(func):
    return click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write the result to a file")(func)


def make_compute_command(name: str, family: Family):
    @click.command(name=name, help=family.help)
    @click.argument("n", type=int)
    @format_option
    @click.option("--oracle", "use_oracle", is_flag=True, help="Use the recursion oracle instead of the closed form")
    @out_option
    @click.pass_context
    def command(ctx, n, fmt, use_oracle, out):
        check_size(n, slack=family.size_slack)
        fmt = fmt or ctx.find_root().obj.default_format
        with handle_errors():
            poly = family.oracle(n) if use_oracle else family.closed(n)
            emit(render_graded(poly, fmt), out)

    return command


for _name, _family in FAMILIES.items():
    main.add_command(make_compute_command(_name, _family))


@main.command()
@click.argument("family")
@click.argument("n", type=int)
@format_option
@click.option("--oracle", "use_oracle", is_flag=True, help="Count through the brute-force lattice of flats")
@out_option
@click.pass_context
def dims(ctx, family, n, fmt, use_oracle, out):
    """Dimension polynomial of FAMILY at size N"""
    if family not in FAMILIES:
        suggestion = suggest_family(family)
        show_error(
            f"unknown family {family!r}",
            f"did you mean '{suggestion}'?" if suggestion else f"families: {', '.join(FAMILIES)}",
        )
        sys.exit(EXIT_USAGE)
    entry = FAMILIES[family]
    check_size(n, slack=entry.size_slack)
    fmt = fmt or ctx.find_root().obj.default_format
    with handle_errors():
        if use_oracle:
            if n > entry.lattice_limit:
                raise InvalidInputError(f"the lattice oracle for {family} is limited to N <= {entry.lattice_limit}")
            poly, source = entry.lattice(n), "lattice"
        else:
            poly, source = dimension_poly(entry.closed(n)), "formula"
        emit(render_integer_poly(poly, fmt, family, n, source), out)


@main.group()
def verify():
    """Run verification suites 🔍"""


@verify.command("all")
@click.option("--max-n", type=int, default=None, help="Largest size checked (default from settings)")
@click.option("--series-order", type=int, default=None, help="u-order of the series identities")
@click.option("--only", multiple=True, type=click.Choice(list(SUITES)), help="Run only these suites")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@out_option
@click.pass_context
def verify_all(ctx, max_n, series_order, only, fmt, out):
    """Run every suite and print a summary"""
    settings = ctx.find_root().obj
    max_n = settings.max_n if max_n is None else max_n
    check_size(max_n, "--max-n")
    series_order = settings.series_order if series_order is None else series_order
    with handle_errors():
        report = run_all(max_n, series_order, list(only) or None)
    if fmt == "json":
        emit(dumps(report), out)
    else:
        show_verify_table(report)
    if report["summary"]["overall_status"] != "PASS":
        sys.exit(EXIT_VERIFICATION_FAILED)


@verify.command("series")
@click.option("--order", type=int, default=None, help="Truncation order in u (default from settings)")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@out_option
@click.pass_context
def verify_series(ctx, order, fmt, out):
    """Check the generating-function identities to u^ORDER"""
    order = ctx.find_root().obj.series_order if order is None else order
    with handle_errors():
        checks = verify_series_identities(order)
    if fmt == "json":
        emit(dumps({"order": order, "identities": [check.to_dict() for check in checks]}), out)
    else:
        show_identity_table(checks)
    if not all(check.passed for check in checks):
        sys.exit(EXIT_VERIFICATION_FAILED)


@main.command()
@click.option("--max-n", type=int, default=6, show_default=True, help="Largest n swept")
@click.option("--variant", type=click.Choice(VARIANTS, case_sensitive=False), default="p", show_default=True)
@click.option("--strong", is_flag=True, help="Sweep all i <= j, not only i = j")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@out_option
def ilc(max_n, variant, strong, fmt, out):
    """Induced log-concavity sweep of the P or Q coefficients 📈"""
    check_size(max_n, "--max-n")
    with handle_errors():
        report = verify_strong_ilc(max_n, variant, strong)
        document = report.to_dict()
        validate_document(document, "ilc_report")
    if fmt == "json":
        emit(dumps(document), out)
    else:
        show_ilc_summary(report)
    if not report.passed:
        sys.exit(EXIT_VERIFICATION_FAILED)


@main.command()
@click.option("--set", "assignment", metavar="KEY=VALUE", default=None, help="Persist one setting")
@click.pass_context
def settings(ctx, assignment):
    """View and modify your thagkl settings ⚙️"""
    current = ctx.find_root().obj
    if assignment:
        key, sep, value = assignment.partition("=")
        if not sep:
            raise click.BadParameter("expected KEY=VALUE", param_hint="--set")
        with handle_errors():
            current = settings_store.set_value(key.strip(), value.strip())
        console.print(f"✅ {key.strip()} updated to {getattr(current, key.strip())}", highlight=False)
        current = settings_store.load()
    show_settings_panel(current.to_dict(), str(settings_store.config_file), settings_store.overridden)


if __name__ == "__main__":
    main()
