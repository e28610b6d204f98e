import json
from fractions import Fraction
from typing import Any, Iterable, Optional

from ..core import PLFunction
from ..models import (
    BreakpointEvent,
    BruckReport,
    FermatVerdict,
    LinearityVerdict,
    NevanlinnaReport,
    RootCensus,
    TropScalar,
)
from .numbers import format_rational


def _window(window: tuple[Fraction, Fraction]) -> list[str]:
    return [format_rational(window[0]), format_rational(window[1])]


def _float(value: Optional[float]) -> Optional[float]:
    return None if value is None else round(value, 6)


def event_to_dict(event: BreakpointEvent) -> dict[str, Any]:
    return {
        "location": format_rational(event.location),
        "kind": event.kind.display_name,
        "omega": format_rational(event.omega),
        "multiplicity": format_rational(event.multiplicity),
    }


def census_to_dict(census: RootCensus) -> dict[str, Any]:
    return {
        "window": _window(census.window),
        "count": census.count,
        "total_multiplicity": format_rational(census.total_multiplicity),
        "roots": [event_to_dict(e) for e in census.roots],
        "flags": list(census.flags),
    }


def nevanlinna_to_dict(report: NevanlinnaReport) -> dict[str, Any]:
    return {
        "radii": [format_rational(r) for r in report.radii],
        "m": [format_rational(v) for v in report.m_values],
        "N": [format_rational(v) for v in report.n_values],
        "T": [format_rational(v) for v in report.t_values],
        "order_estimate": _float(report.order_estimate),
        "hyper_order_estimate": _float(report.hyper_order_estimate),
        "fit_window": _window(report.fit_window),
        "estimator": report.estimator,
        "flags": list(report.flags),
    }


def fermat_to_dict(verdict: FermatVerdict) -> dict[str, Any]:
    data: dict[str, Any] = {
        "verdict": "HoldsOnWindow" if verdict.holds else "Witness",
        "holds": verdict.holds,
        "window": _window(verdict.window),
        "hypotheses_hold": verdict.hypotheses_hold,
    }
    if verdict.witness is not None:
        data["witness"] = format_rational(verdict.witness)
        data["value"] = str(verdict.value)
    return data


def linearity_to_dict(verdict: LinearityVerdict) -> dict[str, Any]:
    data: dict[str, Any] = {
        "verdict": "IsLinear" if verdict.is_linear else "NotLinear",
        "is_linear": verdict.is_linear,
        "slope": format_rational(verdict.slope),
        "intercept": format_rational(verdict.intercept),
    }
    if verdict.witness is not None:
        data["witness"] = format_rational(verdict.witness)
    return data


def bruck_to_dict(report: BruckReport) -> dict[str, Any]:
    return {
        "alternative": report.alternative.display_name,
        "A": format_rational(report.a_coeff),
        "B": format_rational(report.b_coeff),
        "periodic_residue_verified": report.periodic_residue_verified,
        "shared_root_check": report.shared_root_check,
        "linear_difference": report.linear_difference,
        "level": format_rational(report.level),
        "tails": [_window(t) for t in report.tails],
        "mismatch": None if report.mismatch is None else event_to_dict(report.mismatch),
        "flags": list(report.flags),
    }


def format_json(data: Any) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False)


def format_plot_tsv(
    f: PLFunction, lo: Fraction, hi: Fraction, samples: Iterable[tuple[Fraction, TropScalar]]
) -> str:
    """
    Rows "x<TAB>value<TAB>left_slope<TAB>right_slope", with a "# event"
    comment line before every root or pole.

    Args:
        f: Function to tabulate.
        lo: Left end of the window.
        hi: Right end of the window.
        samples: Increasing (x, f(x)) pairs, breakpoints included.
    """
    events = {event.location: event for event in f.events_in(lo, hi, closed=True)}
    lines = ["# x\tvalue\tleft_slope\tright_slope"]
    for x, value in samples:
        event = events.get(x)
        if event is not None:
            lines.append(
                f"# event {event.kind.display_name} at {format_rational(x)} "
                f"multiplicity {format_rational(event.multiplicity)}"
            )
        left, right = f.slopes(x)
        lines.append(
            "\t".join(
                (format_rational(x), str(value), format_rational(left), format_rational(right))
            )
        )
    return "\n".join(lines)
