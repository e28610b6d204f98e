import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import NoReturn

import click

from .analysis import (
    EXAMPLES,
    bruck_check,
    fermat_sum_check,
    hayman_census,
    hayman_linearity_check,
    run_example,
)
from .config import Config
from .core import evaluate
from .errors import OpenFamilyError, SpecParseError, TropError
from .models import FamilyStatus, RootCensus
from .nevanlinna import nevanlinna_report
from .search import WindowScanner
from .solver import (
    CASES,
    EquationSpec,
    default_grid,
    instantiate,
    residual,
    solve as solve_equation,
)
from .utils import (
    KINDS,
    bruck_to_dict,
    census_to_dict,
    dump_function,
    fermat_to_dict,
    format_json,
    format_plot_tsv,
    format_rational,
    linearity_to_dict,
    load_document,
    load_function,
    nevanlinna_to_dict,
    parse_coefficients,
    parse_params,
    parse_rational,
    parse_rational_list,
    parse_window,
)

EXIT_VERIFY_FAILED = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_OPEN = 4
EXIT_PARTIAL = 5

SPEC_FILE = click.Path(exists=True, dir_okay=False, path_type=Path)
COEFFICIENTS = {"ignore_unknown_options": True}


def _abort(error: Exception, code: int) -> NoReturn:
    click.echo(f"Error: {error}", err=True)
    sys.exit(code)


def _exit_code(error: Exception) -> int:
    if isinstance(error, OpenFamilyError):
        return EXIT_OPEN
    if isinstance(error, SpecParseError):
        return EXIT_PARSE
    if isinstance(error, TropError):
        return EXIT_DOMAIN
    return EXIT_PARSE


def _parse_or_abort(parse, *args):
    try:
        return parse(*args)
    except (TropError, ValueError) as e:
        _abort(e, _exit_code(e))


def _exponent_range(text: str) -> tuple[int, int]:
    lo, hi = parse_window(text)
    if lo.denominator != 1 or hi.denominator != 1:
        raise SpecParseError(f"Radius exponents must be integers, got {text}")
    return int(lo), int(hi)


def _tails(text: str) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
    parts = text.split(",")
    if len(parts) != 2:
        raise SpecParseError(f"Tails must be LO:HI,LO:HI, got {text!r}")
    left, right = (parse_window(part) for part in parts)
    return left, right


def _configure(
    grid_window: str | None,
    grid_size: int | None,
    bracket_window: str | None,
    radii: str | None,
    doubling_cap: int | None,
) -> None:
    if grid_window is not None:
        Config.set_grid_window(*parse_window(grid_window))
    if grid_size is not None:
        Config.set_grid_size(grid_size)
    if bracket_window is not None:
        Config.set_bracket_window(*parse_window(bracket_window))
    if radii is not None:
        Config.set_radius_exponents(*_exponent_range(radii))
    if doubling_cap is not None:
        Config.set_doubling_cap(doubling_cap)


@click.group()
@click.option("--verbose", "-v", count=True, help="Log to stderr; -v for info, -vv for debug.")
@click.option("--seed", type=int, default=None, help="Seed for every randomised sample.")
@click.option("--grid-window", default=None, help="Default window LO:HI for grids and scans (-8:8).")
@click.option("--grid-size", type=int, default=None, help="Default number of residual grid points (64).")
@click.option("--bracket-window", default=None, help="Window LO:HI on which brackets check their lattice (-64:64).")
@click.option("--radii", default=None, help="Default radii 2^k for k in LO:HI (3:13).")
@click.option("--doubling-cap", type=int, default=None, help="Maximum window doublings of the Fermat checker (10).")
def main(
    verbose: int,
    seed: int | None,
    grid_window: str | None,
    grid_size: int | None,
    bracket_window: str | None,
    radii: str | None,
    doubling_cap: int | None,
) -> None:
    """
    Tropcalc - exact max-plus piecewise-linear functions and difference equations.

    Numbers are exact rationals written as p/q; -inf is the tropical zero.

    \b
    Examples:
      tropcalc eval psi.json 3
      tropcalc plot phi.json --window -4:4 --step 1/4
      tropcalc solve 1 -2 1 --rhs 1
      tropcalc solve 1 -1 1 -1 --instantiate > y.json
      tropcalc verify y.json 1 -1 1 -1 --rhs 1
      tropcalc experiment hayman exp2.json --alpha 1 --shift 1 --window -20:20
    """
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    if seed is not None:
        Config.set_seed(seed)
    _parse_or_abort(_configure, grid_window, grid_size, bracket_window, radii, doubling_cap)


@main.command(name="eval")
@click.argument("spec_file", type=SPEC_FILE)
@click.argument("x")
def eval_command(spec_file: Path, x: str) -> None:
    """
    Evaluate a function document at a point.

    \b
    Examples:
      tropcalc eval psi.json 3
      tropcalc eval sawtooth.json 1/2
    """
    f = _parse_or_abort(load_function, spec_file)
    point = _parse_or_abort(parse_rational, x)
    try:
        click.echo(str(evaluate(f, point)))
    except TropError as e:
        _abort(e, _exit_code(e))


@main.command()
@click.argument("spec_file", type=SPEC_FILE)
@click.option("--window", "-w", default="-4:4", show_default=True, help="Window LO:HI.")
@click.option("--step", default="1/2", show_default=True, help="Sampling step P/Q.")
def plot(spec_file: Path, window: str, step: str) -> None:
    """
    Tabulate a function as TSV: x, value, left and right slopes.

    Breakpoints are always included and announced by "# event" lines.

    \b
    Examples:
      tropcalc plot psi.json --window -3:3 --step 1
    """
    f = _parse_or_abort(load_function, spec_file)
    lo, hi = _parse_or_abort(parse_window, window)
    step_value = _parse_or_abort(parse_rational, step)
    if step_value <= 0:
        _abort(SpecParseError(f"Step must be positive, got {step}"), EXIT_PARSE)
    try:
        samples = WindowScanner(f).scan(lo, hi, step_value)
        click.echo(format_plot_tsv(f, lo, hi, samples))
    except TropError as e:
        _abort(e, _exit_code(e))


def _equation(coefficients: tuple[str, ...], rhs: str, rhs_slope: str) -> EquationSpec:
    return EquationSpec.of(parse_coefficients(coefficients), parse_rational(rhs), parse_rational(rhs_slope))


@main.command(context_settings=COEFFICIENTS)
@click.argument("coefficients", nargs=-1, required=True, type=click.UNPROCESSED)
@click.option("--rhs", default="1", show_default=True, help="Constant right-hand side c.")
@click.option("--rhs-slope", default="0", show_default=True, help="Affine part a of rhs a*x + c.")
@click.option("--instantiate", "as_function", is_flag=True, help="Print an instantiated function document.")
@click.option("--params", type=SPEC_FILE, default=None, help="JSON slot assignments for --instantiate.")
def solve(
    coefficients: tuple[str, ...],
    rhs: str,
    rhs_slope: str,
    as_function: bool,
    params: Path | None,
) -> None:
    """
    Solve n_0 y(x) + n_1 y(x+1) + ... + n_s y(x+s) = rhs for s <= 3.

    Exit code 4 for Open families, 5 for PartialKnown ones.

    \b
    Examples:
      tropcalc solve 1 2 --rhs 1
      tropcalc solve "1 1 1"
      tropcalc solve 1 -2 1 --instantiate --params params.json
    """
    spec = _parse_or_abort(_equation, coefficients, rhs, rhs_slope)
    try:
        family = solve_equation(spec)
        if as_function:
            slot_values = parse_params(load_document(params), family.slots) if params else None
            click.echo(dump_function(instantiate(family, slot_values)))
            return
    except (TropError, ValueError) as e:
        _abort(e, _exit_code(e))

    click.echo(format_json(family.to_dict()))
    if family.status == FamilyStatus.OPEN:
        sys.exit(EXIT_OPEN)
    if family.status == FamilyStatus.PARTIAL_KNOWN:
        sys.exit(EXIT_PARTIAL)


@main.command(context_settings=COEFFICIENTS)
@click.argument("solution_file", type=SPEC_FILE)
@click.argument("coefficients", nargs=-1, required=True, type=click.UNPROCESSED)
@click.option("--rhs", default="1", show_default=True, help="Constant right-hand side c.")
@click.option("--rhs-slope", default="0", show_default=True, help="Affine part a of rhs a*x + c.")
@click.option("--grid", "grid_size", type=int, default=None, help="Number of grid points (default from --grid-size).")
@click.option("--window", "-w", default=None, help="Grid window LO:HI (default from --grid-window).")
def verify(
    solution_file: Path,
    coefficients: tuple[str, ...],
    rhs: str,
    rhs_slope: str,
    grid_size: int | None,
    window: str | None,
) -> None:
    """
    Exact residual of a function against an equation on a mixed grid.

    Exit code 1 when the residual is not zero.

    \b
    Examples:
      tropcalc verify y.json 1 -1 1 -1 --rhs 1 --grid 128
    """
    f = _parse_or_abort(load_function, solution_file)
    spec = _parse_or_abort(_equation, coefficients, rhs, rhs_slope)
    grid_window = _parse_or_abort(parse_window, window) if window else None
    grid = default_grid(grid_size, grid_window)
    try:
        value = residual(f, spec, grid)
    except TropError as e:
        _abort(e, _exit_code(e))
    click.echo(
        format_json(
            {
                "residual": format_rational(value),
                "passed": value == 0,
                "grid_size": len(grid),
                "window": [format_rational(grid[0]), format_rational(grid[-1])],
                "equation": str(spec),
            }
        )
    )
    if value != 0:
        sys.exit(EXIT_VERIFY_FAILED)


def _radii(exponents: str | None) -> list[Fraction]:
    if exponents is None:
        return Config.get_radii()
    lo, hi = _exponent_range(exponents)
    return [Fraction(2) ** k for k in range(lo, hi + 1)]


def _window_or_default(window: str | None) -> tuple[Fraction, Fraction]:
    return parse_window(window) if window is not None else Config.get_grid_window()


@main.command()
@click.argument("spec_file", type=SPEC_FILE)
@click.option("--exponents", default=None, help="Radii 2^k for k in LO:HI (default from --radii, 3:13).")
def nevanlinna(spec_file: Path, exponents: str | None) -> None:
    """
    Proximity, counting and characteristic functions with order estimates.

    \b
    Examples:
      tropcalc nevanlinna psi.json --exponents 3:13
    """
    f = _parse_or_abort(load_function, spec_file)
    radii = _parse_or_abort(_radii, exponents)
    try:
        report = nevanlinna_report(f, radii)
    except (TropError, ValueError) as e:
        _abort(e, _exit_code(e))
    click.echo(format_json(nevanlinna_to_dict(report)))


@main.command()
@click.argument("spec_file", type=SPEC_FILE)
@click.option("--window", "-w", default=None, help="Closed window LO:HI (default from --grid-window).")
@click.option("--poles", is_flag=True, help="List poles instead of roots.")
def roots(spec_file: Path, window: str | None, poles: bool) -> None:
    """
    Roots (or poles) of a function in a closed window, with multiplicities.

    \b
    Examples:
      tropcalc roots exp2.json --window -20:20
    """
    f = _parse_or_abort(load_function, spec_file)
    lo, hi = _parse_or_abort(_window_or_default, window)
    try:
        events = f.events_in(lo, hi, closed=True)
    except TropError as e:
        _abort(e, _exit_code(e))
    selected = tuple(e for e in events if (e.is_pole if poles else e.is_root))
    click.echo(format_json(census_to_dict(RootCensus((lo, hi), selected))))


@main.group()
def experiment() -> None:
    """Checkers for Fermat-type sums, Hayman-type products and Brück-type equations."""


@experiment.command(name="fermat")
@click.argument("spec_files", nargs=-1, required=True, type=SPEC_FILE)
@click.option("--alphas", required=True, help="Exponents, e.g. \"1,2\"; one per function.")
@click.option("--window", "-w", default=None, help="Initial window LO:HI (default from --grid-window).")
def experiment_fermat(spec_files: tuple[Path, ...], alphas: str, window: str | None) -> None:
    """
    Look for a point where max_j alpha_j f_j(x) is not 1.

    \b
    Examples:
      tropcalc experiment fermat f.json g.json --alphas 1,1 --window -100:100
    """
    fs = [_parse_or_abort(load_function, path) for path in spec_files]
    exponents = _parse_or_abort(parse_rational_list, alphas)
    bounds = _parse_or_abort(_window_or_default, window)
    try:
        verdict = fermat_sum_check(fs, exponents, bounds)
    except (TropError, ValueError) as e:
        _abort(e, _exit_code(e))
    click.echo(format_json(fermat_to_dict(verdict)))


@experiment.command(name="hayman")
@click.argument("spec_file", type=SPEC_FILE)
@click.option("--alpha", required=True, help="Exponent alpha.")
@click.option("--shift", "shift_by", required=True, help="Shift c.")
@click.option("--window", "-w", default=None, help="Closed window LO:HI (default from --grid-window).")
@click.option("--linearity", is_flag=True, help="Test alpha f(x) + f(x+c) for linearity instead.")
def experiment_hayman(spec_file: Path, alpha: str, shift_by: str, window: str | None, linearity: bool) -> None:
    """
    Root census (or linearity test) of alpha f(x) + f(x+c).

    \b
    Examples:
      tropcalc experiment hayman exp2.json --alpha 1 --shift 1 --window -20:20
      tropcalc experiment hayman pi_a.json --alpha 1 --shift -1/2 --linearity
    """
    f = _parse_or_abort(load_function, spec_file)
    alpha_value = _parse_or_abort(parse_rational, alpha)
    shift_value = _parse_or_abort(parse_rational, shift_by)
    bounds = _parse_or_abort(_window_or_default, window)
    try:
        if linearity:
            data = linearity_to_dict(hayman_linearity_check(f, alpha_value, shift_value, bounds))
        else:
            data = census_to_dict(hayman_census(f, alpha_value, shift_value, bounds))
    except TropError as e:
        _abort(e, _exit_code(e))
    click.echo(format_json(data))


@experiment.command(name="bruck")
@click.argument("spec_file", type=SPEC_FILE)
@click.option("--level", required=True, help="Clipping level a.")
@click.option("--tails", default=None, help="Left and right tails LO:HI,LO:HI (default -40:-20,20:40).")
def experiment_bruck(spec_file: Path, level: str, tails: str | None) -> None:
    """
    Check max(f(x+1), a) = max(f(x), a) + Ax + B on two tail windows.

    \b
    Examples:
      tropcalc experiment bruck psi.json --level -100
      tropcalc experiment bruck psi.json --level -100 --tails -80:-40,40:80
    """
    f = _parse_or_abort(load_function, spec_file)
    a = _parse_or_abort(parse_rational, level)
    if tails is not None:
        Config.set_bruck_tails(*_parse_or_abort(_tails, tails))
    try:
        report = bruck_check(f, a)
    except (TropError, ValueError) as e:
        _abort(e, _exit_code(e))
    click.echo(format_json(bruck_to_dict(report)))


@experiment.command(name="example")
@click.argument("name", type=click.Choice(sorted(EXAMPLES)))
def experiment_example(name: str) -> None:
    """Run one of the packaged examples."""
    click.echo(format_json(run_example(name)))


@main.command()
def list_kinds() -> None:
    """List all function document kinds."""
    click.echo("\nFunction document kinds:")
    click.echo("-" * 40)
    for kind in KINDS:
        click.echo(f"  {kind}")


@main.command()
@click.option("--status", "status_name", default=None, help="Only cases with this status, e.g. open.")
def list_cases(status_name: str | None) -> None:
    """List all case labels of the solver with their status."""
    status = _parse_or_abort(FamilyStatus.from_string, status_name) if status_name else None
    click.echo("\nSolver cases:")
    click.echo("-" * 60)
    for label, info in CASES.items():
        if status is None or info.status == status:
            click.echo(f"  {label:<28} {info.status.display_name}")


@main.command()
def list_examples() -> None:
    """List the packaged examples."""
    click.echo("\nPackaged examples:")
    click.echo("-" * 60)
    for name, example in EXAMPLES.items():
        click.echo(f"  {name:<20} {example.description}")


if __name__ == "__main__":
    main()
