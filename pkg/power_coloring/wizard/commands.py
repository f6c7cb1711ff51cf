# Copyright 2026 Power Coloring Contributors
# License AGPL-3.0 or later (http://www.gnu.org/licenses/agpl).
"""``power-coloring`` command line.

Exit codes: 0 when every reported verdict holds, 1 when one fails, 2 on
usage errors and rejected input.
"""

import functools
import json
import logging
import time

import click
import numpy as np

from .. import analysis
from ..analysis.sampling import sample_dependency_bound, sample_proper
from ..construct import lowered_entries, minimize as minimize_table
from ..construct import rank_in_trace, tabulate_coloring
from ..exceptions import UserError, ValidationError
from ..models.color_code import ColorCode
from ..models.coloring_table import ColoringTable, save
from ..models.lazy_coloring import LazyColoring
from ..models.point import FinitePoint
from ..models.space import SpaceSig
from ..tools import config
from .document_parser import parse_coloring, parse_table
from .point_parser import parse_point
from .run_report import RunReport

_logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class CommandError(click.ClickException):
    exit_code = 2


def handle_errors(command):
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except UserError as err:
            raise CommandError(str(err))

    return wrapper


def _sig(ctx, param, value):
    if value is None:
        return None
    try:
        return SpaceSig.parse(value)
    except UserError as err:
        raise click.BadParameter(str(err))


def _finish(report, started):
    ctx = click.get_current_context()
    if ctx.find_root().obj["timing"]:
        report.timing_ms = (time.perf_counter() - started) * 1000.0
    click.echo(report.render())
    ctx.exit(report.exit_code)


@click.group()
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default=None,
    help="Logging level (default from POWER_COLORING_LOG_LEVEL).",
)
@click.option("--budget", type=click.IntRange(min=1), default=None, help="Oracle node budget.")
@click.option("--timing", is_flag=True, help="Add the run time to reports.")
@click.pass_context
def main(ctx, log_level, budget, timing):
    """Build and check colorings of powers of complete graphs."""
    if log_level:
        config["log_level"] = log_level.upper()
    if budget is not None:
        config["oracle_budget"] = budget
    logging.basicConfig(format=LOG_FORMAT)
    logging.getLogger("power_coloring").setLevel(config["log_level"])
    ctx.obj = {"timing": timing}


@main.command()
@click.argument("descriptor", type=click.File("r"))
@click.option("--sig", callback=_sig, help="Truncate a lazy coloring to L,K with budget M.")
@click.option("--out", type=click.File("w"), default="-", help="Table file (default stdout).")
@handle_errors
def gen(descriptor, sig, out):
    """Write the table described by DESCRIPTOR."""
    coloring = parse_coloring(descriptor)
    if isinstance(coloring, LazyColoring):
        if sig is None:
            raise UserError("%s is lazy: give --sig to truncate it." % coloring.name)
        coloring = tabulate_coloring(coloring, sig.lambda_, sig.kappa)
        if coloring.sig.mu > sig.mu:
            raise ValidationError(
                "The truncation uses %s colors, over the budget %s." % (coloring.sig.mu, sig.mu)
            )
        coloring = coloring.with_colors(coloring.colors, mu=sig.mu)
    save(coloring, out)


def _nu_tight(table, argument):
    try:
        nu = int(argument)
    except ValueError:
        raise UserError("nu-tight needs an integer, got %r." % argument)
    return analysis.is_nu_tight(table, nu)


def _weak_uniform(table):
    witness, deepest = analysis.weak_uniformity_search(table)
    if witness is None:
        return analysis.Verdict.failed({"deepest": deepest})
    return analysis.Verdict.passed()


PROPERTIES = {
    "proper": analysis.is_proper,
    "tight": analysis.is_tight,
    "ctight": lambda table: analysis.is_c_tight(table, table.used_colors),
    "minimal": analysis.is_minimal,
    "strong-uniform": analysis.is_strongly_uniform,
    "weak-uniform": _weak_uniform,
    "lawful-classes": analysis.classes_maximal_lawful,
}


def check_property(table, name):
    name, _sep, argument = name.strip().partition(":")
    if name == "nu-tight":
        return _nu_tight(table, argument)
    if name not in PROPERTIES or argument:
        raise UserError(
            "Unknown property %r, expected one of %s, nu-tight:N."
            % (name, ", ".join(PROPERTIES))
        )
    return PROPERTIES[name](table)


@main.command()
@click.argument("table", type=click.File("r"))
@click.option("--props", default="proper,tight,minimal", show_default=True)
@handle_errors
def check(table, props):
    """Run the checkers named in --props on TABLE."""
    started = time.perf_counter()
    coloring = parse_table(table)
    names = [name.strip() for name in props.split(",") if name.strip()]
    if not names:
        raise UserError("No property requested.")
    report = RunReport("check %s" % ",".join(names))
    for name in names:
        report.add(name, check_property(coloring, name))
    _finish(report, started)


@main.command()
@click.argument("table", type=click.File("r"))
@handle_errors
def classify(table):
    """Report the principal form or factor classification of TABLE."""
    started = time.perf_counter()
    coloring = parse_table(table)
    verdict = analysis.is_proper(coloring)
    if not verdict:
        raise ValidationError(
            "Only proper colorings can be classified: %s and %s share a color."
            % verdict.witness
        )
    report = RunReport("classify")
    form = None
    if coloring.sig.mu == coloring.sig.kappa:
        form = analysis.extract_principal_form(coloring)
    if form is None:
        form = analysis.classify_2tight(coloring)
    if isinstance(form, analysis.ClassificationFailure):
        report.details["form"] = "NotTrivial"
        report.add("trivial", False, form)
    else:
        report.details["form"] = type(form).__name__
        report.details.update(form.to_dict())
        report.add("trivial", True)
    _finish(report, started)


@main.command(name="eval")
@click.argument("source", type=click.File("r"))
@click.argument("point")
@click.option("--rank", is_flag=True, help="Also print the rank of a composite color.")
@handle_errors
def evaluate(source, point, rank):
    """Print the color of POINT under the table or descriptor SOURCE."""
    coloring = parse_coloring(source)
    point = parse_point(point)
    if isinstance(coloring, ColoringTable) and not isinstance(point, FinitePoint):
        raise UserError("Tables color points a,b,c, got %s." % point)
    color = coloring(point)
    if not isinstance(color, ColorCode):
        click.echo(str(color))
        return
    document = color.to_dict()
    if rank:
        document["rank"] = rank_in_trace(color)
    click.echo(json.dumps(document, separators=(", ", ": ")))


@main.command()
@click.argument("table", type=click.File("r"))
@click.option("--out", type=click.File("w"), required=True, help="Minimized table file.")
@handle_errors
def minimize(table, out):
    """Lower the colors of a proper TABLE to a minimal coloring."""
    started = time.perf_counter()
    coloring = parse_table(table)
    result = minimize_table(coloring)
    save(result, out)
    report = RunReport("minimize")
    report.details["lowered"] = lowered_entries(coloring, result)
    report.add("minimal", analysis.is_minimal(result))
    _finish(report, started)


@main.command()
@click.option("--sig", callback=_sig, required=True, help="Space L,K,M.")
@click.option("--count", is_flag=True, help="Only print the number of tables.")
@handle_errors
def oracle(sig, count):
    """Stream every proper coloring of the space, one JSON table per line."""
    total = 0
    for table in analysis.oracle_enumerate_proper(sig):
        total += 1
        if not count:
            click.echo(json.dumps(table.to_dict(), separators=(", ", ": ")))
    if count:
        click.echo(str(total))


@main.command()
@click.argument("descriptor", type=click.File("r"))
@click.option("--seed", type=int, required=True, help="Seed of the sampler.")
@click.option("--samples", type=click.IntRange(min=1), default=None)
@handle_errors
def probe(descriptor, seed, samples):
    """Sample properness and dependency bounds of a lazy coloring of ^ωω."""
    started = time.perf_counter()
    coloring = parse_coloring(descriptor)
    if not isinstance(coloring, LazyColoring) or coloring.arity is not None:
        raise UserError("probe needs a lazy coloring of ^ωω.")
    count = config["sample_count"] if samples is None else samples
    report = RunReport("probe --seed %s" % seed)
    report.details["samples"] = count
    report.add("proper", sample_proper(coloring, np.random.default_rng(seed), count))
    report.add(
        "dependency-bound",
        sample_dependency_bound(coloring, np.random.default_rng(seed + 1), count),
    )
    _finish(report, started)
