"""qmono command line: Stokes and connection matrices, braid actions and verification suites."""
import io
import sys
from dataclasses import dataclass, field

import click
import numpy as np
import sympy
import mpmath
from rich.console import Console
from rich.table import Table
from sympy import Matrix

from config import QMONO_PRECISION, CliCfg, PrecisionCfg, VerifyCfg
from core.approx import ApproxComplex
from core.backend import check_symbolic_size, get_backend
from core.braid import BraidWord
from core.errors import ArgumentError, QmonoError
from core.sym_scalar import SymScalar
from core.types import Backend, OutputFormat, Space, Suite
from grassmannian.monodromy import grass_chamber, grass_monodromy, grass_stokes
from monodromy.actions import braid_act
from monodromy.data import MonodromyData
from projective.canonical import chamber_data, chamber_stokes
from projective.coords import chamber_index, parse_complex
from serialization import dump_monodromy, load_monodromy, monodromy_to_json, serialize_to_json
from verify.suites import SuiteReport, run_suite
from logger import get_logger, set_level

logger = get_logger()


@dataclass
class OutputDocument:
    command: str
    format: OutputFormat
    backend: str
    precision: int
    payload: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "format": self.format.value,
            "backend": self.backend,
            "precision": self.precision,
            "payload": self.payload,
        }


# ----------------------------------------------------------------------
# RENDERING
# ----------------------------------------------------------------------
def _scalar_text(x) -> str:
    if isinstance(x, SymScalar):
        return str(x.to_expr())
    if isinstance(x, ApproxComplex):
        return mpmath.nstr(x.value, 15)
    return str(x)


def _scalar_latex(x) -> str:
    if isinstance(x, SymScalar):
        return sympy.latex(x.to_expr())
    if isinstance(x, ApproxComplex):
        return mpmath.nstr(x.value, 15).replace("j", "i")
    return sympy.latex(sympy.nsimplify(x))


def _rows(M) -> list[list]:
    if isinstance(M, Matrix):
        return [list(M.row(i)) for i in range(M.rows)]
    return np.asarray(M, dtype=object).tolist()


def matrix_latex(M) -> str:
    body = " \\\\\n".join(" & ".join(_scalar_latex(x) for x in row) for row in _rows(M))
    return "\\begin{pmatrix}\n" + body + "\n\\end{pmatrix}"


def matrix_table(title: str, M) -> Table:
    rows = _rows(M)
    table = Table(title=title, show_header=False)
    for _ in range(len(rows[0]) if rows else 0):
        table.add_column(justify="right")
    for row in rows:
        table.add_row(*(_scalar_text(x) for x in row))
    return table


def _render_text(*renderables) -> str:
    buffer = io.StringIO()
    console = Console(file=buffer, width=200, color_system=None)
    for item in renderables:
        console.print(item)
    return buffer.getvalue().rstrip("\n")


def report_table(report: SuiteReport) -> Table:
    table = Table(title=f"suite {report.suite.value}")
    table.add_column("check")
    table.add_column("result")
    for result in report.results:
        table.add_row(result.name, "pass" if result.passed else "FAIL")
    return table


def emit(document: OutputDocument, matrices: dict = None, report: SuiteReport = None):
    """Writes the document to stdout in the requested format."""
    if document.format == OutputFormat.JSON:
        click.echo(serialize_to_json(document))
    elif document.format == OutputFormat.LATEX:
        if report is not None:
            lines = [f"{r.name} & {'pass' if r.passed else 'FAIL'} \\\\" for r in report.results]
            click.echo("\\begin{tabular}{ll}\n" + "\n".join(lines) + "\n\\end{tabular}")
        for name, M in (matrices or {}).items():
            click.echo(f"{name} = {matrix_latex(M)}")
    else:
        items = [matrix_table(name, M) for name, M in (matrices or {}).items()]
        if report is not None:
            items.append(report_table(report))
        click.echo(_render_text(*items))


# ----------------------------------------------------------------------
# ARGUMENTS
# ----------------------------------------------------------------------
def _space_args(space: str, k: int, r: int):
    space = Space(space)
    if k < 2:
        raise ArgumentError(f"k must be at least 2, got {k}")
    if space == Space.GRASSMANNIAN:
        if r is None:
            raise ArgumentError("--r is required for --space G")
        if not 0 < r < k:
            raise ArgumentError(f"G(r,k) needs 0 < r < k, got r={r}, k={k}")
    return space, (1 if space == Space.PROJECTIVE else r)


def _chamber(space: Space, k: int, r: int, chamber, t: str, phi, precision: int) -> int:
    if chamber is not None:
        return chamber
    point = parse_complex(t)
    if space == Space.PROJECTIVE:
        return chamber_index(k, point, phi, precision)
    return grass_chamber(r, k, point, phi, precision)


def _run(fn):
    """Maps package errors onto click's exit codes."""
    try:
        return fn()
    except ArgumentError as exc:
        raise click.UsageError(str(exc)) from exc
    except QmonoError as exc:
        logger.error(f"[CLI] {type(exc).__name__}: {exc}")
        sys.exit(1)


def space_options(fn):
    fn = click.option("--phi", type=float, default=None, help="slope of the oriented line")(fn)
    fn = click.option("--t", "t", default="0", show_default=True, help='small quantum point, complex as "a+bi"')(fn)
    fn = click.option("--chamber", type=int, default=None, help="chamber index; read off --t and --phi when absent")(fn)
    fn = click.option("--r", "r", type=int, default=None, help="Grassmannian rank")(fn)
    fn = click.option("--k", "k", type=int, required=True)(fn)
    fn = click.option("--space", type=click.Choice([s.value for s in Space]), default=Space.PROJECTIVE.value, show_default=True)(fn)
    return fn


def format_option(fn):
    return click.option(
        "--format", "fmt", type=click.Choice([f.value for f in OutputFormat]), default=CliCfg().format, show_default=True
    )(fn)


def backend_options(fn):
    fn = click.option("--precision", type=int, default=QMONO_PRECISION, show_default=True, help="working precision in bits")(fn)
    fn = click.option("--backend", type=click.Choice([b.value for b in Backend]), default=CliCfg().backend, show_default=True)(fn)
    return fn


# ----------------------------------------------------------------------
# COMMANDS
# ----------------------------------------------------------------------
@click.group()
@click.option("--log-level", default=None, help="overrides QMONO_LOG_LEVEL")
def cli(log_level):
    if log_level:
        set_level(log_level)


@cli.command()
@space_options
@format_option
def stokes(space, k, r, chamber, t, phi, fmt):
    """Exact Stokes matrix of a chamber."""

    def run():
        sp, rank = _space_args(space, k, r)
        m = _chamber(sp, k, rank, chamber, t, phi, QMONO_PRECISION)
        S = chamber_stokes(k, m) if sp == Space.PROJECTIVE else grass_stokes(rank, k, m)
        logger.info(f"[CLI] stokes {sp.value} k={k} r={rank} chamber={m}")
        payload = {"space": sp.value, "k": k, "r": rank, "chamber": m, "S": S}
        emit(OutputDocument("stokes", OutputFormat(fmt), "exact", 0, payload), {"S": S})

    _run(run)


@cli.command()
@space_options
@backend_options
@format_option
def connection(space, k, r, chamber, t, phi, backend, precision, fmt):
    """Central connection matrix, with the Stokes matrix of the same chamber."""

    def run():
        sp, rank = _space_args(space, k, r)
        scalars = get_backend(Backend(backend), precision)
        check_symbolic_size(scalars, k)
        m = _chamber(sp, k, rank, chamber, t, phi, precision)
        if sp == Space.PROJECTIVE:
            data = chamber_data(k, m, scalars)
        else:
            data = grass_monodromy(rank, k, m, backend=scalars)
        logger.info(f"[CLI] connection {sp.value} k={k} r={rank} chamber={m} backend={backend}")
        document = OutputDocument("connection", OutputFormat(fmt), backend, precision, monodromy_to_json(data))
        emit(document, {"S": data.S, "C": data.C})

    _run(run)


@cli.command()
@click.option("--suite", type=click.Choice([s.value for s in Suite]), default=Suite.ALL.value, show_default=True)
@click.option("--kmax", type=int, default=VerifyCfg.kmax, show_default=True)
@click.option("--gmax", type=int, default=VerifyCfg.gmax, show_default=True)
@click.option("--trials", type=int, default=VerifyCfg.trials, show_default=True)
@click.option("--seed", type=int, default=VerifyCfg.seed, show_default=True)
@backend_options
@format_option
def verify(suite, kmax, gmax, trials, seed, backend, precision, fmt):
    """Runs a verification suite; exit code 1 when a check fails."""

    def run():
        cfg = VerifyCfg(kmax=kmax, gmax=gmax, trials=trials, seed=seed, precision=PrecisionCfg(bits=precision))
        scalars = get_backend(Backend(backend), precision)
        check_symbolic_size(scalars, max(kmax, gmax))
        report = run_suite(Suite(suite), cfg, scalars)
        emit(OutputDocument("verify", OutputFormat(fmt), backend, precision, report.to_json()), report=report)
        return report.passed

    if not _run(run):
        sys.exit(1)


@cli.command()
@click.argument("data_file", type=click.File("r"))
@click.argument("word", default="")
@format_option
def braid(data_file, word, fmt):
    """Applies a braid word such as "b2 b1 B3" (capitals are inverses) to stored monodromy data."""

    def run():
        data: MonodromyData = load_monodromy(data_file.read())
        moved = braid_act(data, BraidWord.parse(word, data.n))
        logger.info(f"[CLI] braid {word or '(empty)'} on data of size {data.n}")
        if OutputFormat(fmt) == OutputFormat.JSON:
            click.echo(dump_monodromy(moved))
            return
        document = OutputDocument("braid", OutputFormat(fmt), moved.backend.kind.value, moved.backend.precision)
        emit(document, {"S": moved.S, "C": moved.C})

    _run(run)


if __name__ == "__main__":
    cli()
