"""Command line entry point: ``firmhom verify-paper`` and ``firmhom check``."""

from __future__ import annotations

import sys
from fractions import Fraction

import click

from .corpus import (
    PREDICATES,
    REGISTRY,
    InputError,
    Options,
    check_file,
    combined_exit_code,
    predicate_exit_code,
    render_reports,
    run_all,
)

INPUT_ERROR = 2


def _parse_levels(ctx, param, value):
    if value is None:
        return None
    try:
        levels = [int(x) for x in value.split(",") if x.strip()]
    except ValueError:
        raise click.BadParameter("expected a comma separated list of integers") from None
    if not levels or any(n < 1 for n in levels):
        raise click.BadParameter("levels must be positive")
    return levels


def _parse_fraction(ctx, param, value):
    if value is None:
        return None
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise click.BadParameter("expected a rational number such as 1 or 3/4") from None


def _common(f):
    f = click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")(f)
    f = click.option("--stability-window", type=int, default=3, show_default=True)(f)
    f = click.option("--tor-max", type=int, default=2, show_default=True)(f)
    f = click.option("--degree-cutoff", callback=_parse_fraction, default=None,
                     help="largest degree for degree-component checks (default 2)")(f)
    f = click.option("--level", type=int, default=None, help="level N of the monomial backend")(f)
    f = click.option("--timing", is_flag=True, help="include wall time in the report")(f)
    return f


def _options(levels=None, level=None, degree_cutoff=None, tor_max=2, stability_window=3, truncations=None):
    kwargs = dict(levels=levels, level=level, tor_max=tor_max, stability_window=stability_window,
                  truncations=truncations)
    if degree_cutoff is not None:
        kwargs["degree_cutoff"] = degree_cutoff
    try:
        return Options(**kwargs)
    except ValueError as exc:
        click.echo("input error: %s" % exc, err=True)
        sys.exit(INPUT_ERROR)


@click.group()
def main():
    """Exact checks for t-unital, s-unital and c-unital modules over nonunital rings."""


@main.command("verify-paper")
@click.option("--only", multiple=True, help="run only this example id (repeatable)")
@click.option("--levels", callback=_parse_levels, default=None, help="level chain, e.g. 1,2,4")
@click.option("--truncations", callback=_parse_levels, default=None, help="Pruefer truncations, e.g. 1,2,3")
@_common
def verify_paper(only, levels, truncations, fmt, stability_window, tor_max, degree_cutoff, level, timing):
    """Run the registry of worked examples and report every check."""
    for entry in only:
        if entry not in REGISTRY:
            click.echo("input error: unknown example id %r; known ids: %s" % (entry, ", ".join(sorted(REGISTRY))),
                       err=True)
            sys.exit(INPUT_ERROR)
    opt = _options(levels, level, degree_cutoff, tor_max, stability_window, truncations)
    reports = run_all(opt, only or None)
    click.echo(render_reports(reports, fmt, timing))
    sys.exit(combined_exit_code(reports))


@main.command("check")
@click.argument("predicate", type=click.Choice(PREDICATES))
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("--levels", callback=_parse_levels, default=None, help="level chain for ind-rings")
@_common
def check(predicate, path, levels, fmt, stability_window, tor_max, degree_cutoff, level, timing):
    """Run one predicate on a ring, module or homomorphism JSON file."""
    opt = _options(levels, level, degree_cutoff, tor_max, stability_window)
    try:
        report = check_file(path, predicate, opt)
    except InputError as exc:
        click.echo("input error: %s: %s" % (path, exc), err=True)
        sys.exit(INPUT_ERROR)
    click.echo(report.render(fmt, timing))
    sys.exit(predicate_exit_code(report))


if __name__ == "__main__":
    main()
