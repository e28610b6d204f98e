"""
JSON documents for PLFunction trees, profiles and solver parameters.

Every number is an exact string ("p/q"); "-inf" is accepted where a
tropical value may be Bottom.
"""

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Mapping

from ..core import (
    Const,
    Difference,
    FinitePL,
    Linear,
    Max,
    PLFunction,
    Scale,
    Shift,
    Stretch,
    Sum,
    const,
    finite_pl,
    linear,
    oplus,
    oslash,
    otimes,
    power,
    shift,
    stretch,
)
from ..errors import SpecParseError
from ..special import (
    AntiPeriodic,
    AntiPeriodicProfile,
    Bracket,
    Omega,
    Periodic,
    PeriodicProfile,
    Phi,
    Psi,
    Sawtooth,
    Theta,
    TropExp,
    Upsilon,
    exp_combination,
    pi_a,
    psi_period,
)
from .numbers import format_rational, parse_rational, parse_scalar

Document = dict[str, Any]


def _field(doc: Mapping[str, Any], name: str) -> Any:
    if name not in doc:
        raise SpecParseError(f"{doc.get('kind', 'document')} is missing field {name!r}")
    return doc[name]


def _number(doc: Mapping[str, Any], name: str, default: str | None = None) -> Fraction:
    if name not in doc and default is not None:
        return parse_rational(default)
    return parse_rational(_field(doc, name))


def _pairs(raw: Any, name: str) -> list[tuple[Fraction, Fraction]]:
    if not isinstance(raw, list):
        raise SpecParseError(f"{name} must be a list of pairs, got {raw!r}")
    pairs = []
    for item in raw:
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise SpecParseError(f"{name} entries must be pairs, got {item!r}")
        pairs.append((parse_rational(item[0]), parse_rational(item[1])))
    return pairs


def _children(doc: Mapping[str, Any]) -> list[PLFunction]:
    raw = _field(doc, "children")
    if not isinstance(raw, list) or not raw:
        raise SpecParseError(f"{doc['kind']} needs a non-empty children list")
    return [parse_function(child) for child in raw]


def parse_periodic_profile(doc: Mapping[str, Any]) -> PeriodicProfile:
    end = doc.get("end_value")
    return PeriodicProfile(
        tuple(_pairs(_field(doc, "points"), "points")),
        None if end is None else parse_rational(end),
    )


def parse_antiperiodic_profile(doc: Mapping[str, Any]) -> AntiPeriodicProfile:
    end = doc.get("end_value")
    return AntiPeriodicProfile(
        tuple(_pairs(_field(doc, "points"), "points")),
        None if end is None else parse_rational(end),
    )


def _parse_exp(doc: Mapping[str, Any]) -> PLFunction:
    base = _number(doc, "base")
    if "terms" not in doc:
        return stretch(TropExp(base), _number(doc, "dilation", "1"))
    return exp_combination(base, _pairs(doc["terms"], "terms"), _number(doc, "dilation", "1"))


def _parse_psi(doc: Mapping[str, Any]) -> PLFunction:
    if "period" in doc:
        return psi_period(_number(doc, "period"))
    return Psi()


_PARSERS: dict[str, Callable[[Mapping[str, Any]], PLFunction]] = {
    "const": lambda doc: const(parse_scalar(_field(doc, "value"))),
    "linear": lambda doc: linear(_number(doc, "slope"), _number(doc, "intercept", "0")),
    "finite_pl": lambda doc: finite_pl(
        _pairs(_field(doc, "points"), "points"),
        _number(doc, "left_slope", "0"),
        _number(doc, "right_slope", "0"),
    ),
    "max": lambda doc: oplus(*_children(doc)),
    "sum": lambda doc: otimes(*_children(doc)),
    "difference": lambda doc: oslash(
        parse_function(_field(doc, "numerator")), parse_function(_field(doc, "denominator"))
    ),
    "scale": lambda doc: power(parse_function(_field(doc, "child")), _number(doc, "factor")),
    "shift": lambda doc: shift(parse_function(_field(doc, "child")), _number(doc, "offset")),
    "stretch": lambda doc: stretch(parse_function(_field(doc, "child")), _number(doc, "factor")),
    "sawtooth": lambda doc: Sawtooth(_number(doc, "a", "1"), _number(doc, "b", "1")),
    "exp": _parse_exp,
    "psi": _parse_psi,
    "upsilon": lambda doc: Upsilon(),
    "periodic": lambda doc: Periodic(parse_periodic_profile(_field(doc, "profile"))),
    "antiperiodic": lambda doc: AntiPeriodic(parse_antiperiodic_profile(_field(doc, "profile"))),
    "phi": lambda doc: Phi(parse_periodic_profile(_field(doc, "profile"))),
    "theta": lambda doc: Theta(parse_periodic_profile(_field(doc, "profile"))),
    "omega": lambda doc: Omega(parse_periodic_profile(_field(doc, "profile"))),
    "bracket": lambda doc: Bracket(parse_function(_field(doc, "g")), _number(doc, "x0")),
    "pi_a": lambda doc: pi_a(_number(doc, "a")),
}

KINDS: tuple[str, ...] = tuple(sorted(_PARSERS))


def parse_function(doc: Any) -> PLFunction:
    """
    Build a PLFunction from a document.

    Raises:
        SpecParseError: If the document is malformed or names an unknown kind.
        TropDomainError: If a constructor rejects its parameters.
    """
    if not isinstance(doc, dict):
        raise SpecParseError(f"Function document must be an object, got {type(doc).__name__}")
    kind = doc.get("kind")
    if kind not in _PARSERS:
        valid = ", ".join(KINDS)
        raise SpecParseError(f"Unknown function kind: {kind!r}. Valid options: {valid}")
    return _PARSERS[kind](doc)


def _profile_doc(profile: PeriodicProfile | AntiPeriodicProfile) -> Document:
    return {"points": [[format_rational(t), format_rational(v)] for t, v in profile.points]}


_EMITTERS: dict[type, Callable[[Any], Document]] = {
    Const: lambda f: {"kind": "const", "value": str(f.scalar)},
    Linear: lambda f: {
        "kind": "linear",
        "slope": format_rational(f.slope),
        "intercept": format_rational(f.intercept),
    },
    FinitePL: lambda f: {
        "kind": "finite_pl",
        "points": [[format_rational(x), format_rational(v)] for x, v in f.points],
        "left_slope": format_rational(f.left_tail_slope),
        "right_slope": format_rational(f.right_tail_slope),
    },
    Max: lambda f: {"kind": "max", "children": [emit_function(c) for c in f.children]},
    Sum: lambda f: {"kind": "sum", "children": [emit_function(c) for c in f.children]},
    Difference: lambda f: {
        "kind": "difference",
        "numerator": emit_function(f.numerator),
        "denominator": emit_function(f.denominator),
    },
    Scale: lambda f: {"kind": "scale", "factor": format_rational(f.factor), "child": emit_function(f.child)},
    Shift: lambda f: {"kind": "shift", "offset": format_rational(f.offset), "child": emit_function(f.child)},
    Stretch: lambda f: {"kind": "stretch", "factor": format_rational(f.factor), "child": emit_function(f.child)},
    Sawtooth: lambda f: {"kind": "sawtooth", "a": format_rational(f.a), "b": format_rational(f.b)},
    TropExp: lambda f: {"kind": "exp", "base": format_rational(f.base)},
    Psi: lambda f: {"kind": "psi"},
    Upsilon: lambda f: {"kind": "upsilon"},
    Periodic: lambda f: {"kind": "periodic", "profile": _profile_doc(f.profile)},
    AntiPeriodic: lambda f: {"kind": "antiperiodic", "profile": _profile_doc(f.profile)},
    Phi: lambda f: {"kind": "phi", "profile": _profile_doc(f.profile)},
    Theta: lambda f: {"kind": "theta", "profile": _profile_doc(f.profile)},
    Omega: lambda f: {"kind": "omega", "profile": _profile_doc(f.profile)},
    Bracket: lambda f: {"kind": "bracket", "g": emit_function(f.g), "x0": format_rational(f.x0)},
}


def emit_function(f: PLFunction) -> Document:
    """
    Serialise a PLFunction tree.

    Raises:
        TypeError: If the tree contains a node type without a document kind.
    """
    emitter = _EMITTERS.get(type(f))
    if emitter is None:
        raise TypeError(f"No document kind for {type(f).__name__}")
    return emitter(f)


def load_document(path: Path) -> Any:
    """
    Read a JSON file.

    Raises:
        SpecParseError: If the file is not valid JSON.
    """
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise SpecParseError(f"Invalid JSON in {path}: {e}") from e


def load_function(path: Path) -> PLFunction:
    return parse_function(load_document(path))


def dump_function(f: PLFunction) -> str:
    return json.dumps(emit_function(f), indent=2)


def parse_params(doc: Any, slots: Mapping[str, str]) -> dict[str, Any]:
    """
    Slot assignments for instantiate().

    Periodic and anti-periodic slots take {"points": [...]} profiles,
    exponential slots a list of [coeff, shift] pairs.

    Raises:
        SpecParseError: If the document is not an object or a value is malformed.
    """
    if not isinstance(doc, dict):
        raise SpecParseError("Parameter document must be an object mapping slot ids to values")
    params: dict[str, Any] = {}
    for slot, value in doc.items():
        kind = slots.get(slot)
        if kind == "periodic":
            params[slot] = parse_periodic_profile(value)
        elif kind == "antiperiodic":
            params[slot] = parse_antiperiodic_profile(value)
        elif kind == "exp":
            params[slot] = tuple(_pairs(value, slot))
        else:
            params[slot] = value
    return params
