"""Realise solution families as concrete PLFunction trees."""

import logging
import random
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Union

from ..core import PLFunction, const, linear, otimes, power, shift, stretch
from ..errors import OpenFamilyError, TropDomainError
from ..models import FamilyStatus
from ..special import (
    AntiPeriodic,
    AntiPeriodicProfile,
    Bracket,
    Periodic,
    PeriodicProfile,
    Phi,
    Psi,
    Theta,
    Omega,
    Upsilon,
    exp_combination,
    trop_exp,
)
from .family import SolutionFamily
from .terms import (
    AnchoredTerm,
    AntiPeriodicSlot,
    BracketTerm,
    ConstantTerm,
    ExpComb,
    LinearTerm,
    OmegaTerm,
    PeriodicSlot,
    PhiTerm,
    PsiTerm,
    Term,
    ThetaTerm,
    UpsilonTerm,
)

logger = logging.getLogger(__name__)

ExpTerms = Sequence[tuple[Fraction, Fraction]]
SlotValue = Union[PeriodicProfile, AntiPeriodicProfile, ExpTerms]
Params = Mapping[str, SlotValue]

DEFAULT_EXP_TERMS: tuple[tuple[Fraction, Fraction], ...] = ((Fraction(1), Fraction(0)),)


def default_slot_value(kind: str) -> SlotValue:
    """sawtooth(1,1) for periodic slots, the tent for anti-periodic ones, e_base for exp ones."""
    if kind == "periodic":
        return PeriodicProfile.sawtooth(1, 1)
    if kind == "antiperiodic":
        return AntiPeriodicProfile.triangle()
    return DEFAULT_EXP_TERMS


def zero_params(family: SolutionFamily) -> dict[str, SlotValue]:
    """Parameters that switch every free part off, leaving the particular solution."""
    params: dict[str, SlotValue] = {}
    for slot, kind in family.slots.items():
        if kind == "periodic":
            params[slot] = PeriodicProfile.constant(0)
        elif kind == "antiperiodic":
            params[slot] = AntiPeriodicProfile(((Fraction(0), Fraction(0)),))
        else:
            params[slot] = ()
    return params


def _random_fraction(rng: random.Random, lo: int = -5, hi: int = 5) -> Fraction:
    return Fraction(rng.randint(lo * 6, hi * 6), rng.randint(1, 6))


def _random_offsets(rng: random.Random) -> list[Fraction]:
    offsets = {Fraction(rng.randint(1, 11), 12) for _ in range(rng.randint(0, 2))}
    return [Fraction(0)] + sorted(offsets)


def random_params(family: SolutionFamily, seed: int = 0) -> dict[str, SlotValue]:
    """Randomised profiles and exponential combinations for every slot of the family."""
    rng = random.Random(seed)
    params: dict[str, SlotValue] = {}
    for slot, kind in family.slots.items():
        if kind == "periodic":
            params[slot] = PeriodicProfile(tuple((t, _random_fraction(rng)) for t in _random_offsets(rng)))
        elif kind == "antiperiodic":
            params[slot] = AntiPeriodicProfile(tuple((t, _random_fraction(rng)) for t in _random_offsets(rng)))
        else:
            params[slot] = tuple(
                (_random_fraction(rng), Fraction(rng.randint(0, 5), 6)) for _ in range(rng.randint(1, 2))
            )
    return params


def _slot_value(params: Params, slot: str, kind: str) -> SlotValue:
    if slot not in params:
        logger.debug("slot %s not given, using the %s default", slot, kind)
        return default_slot_value(kind)
    value = params[slot]
    expected = {"periodic": PeriodicProfile, "antiperiodic": AntiPeriodicProfile}.get(kind)
    if expected is not None and not isinstance(value, expected):
        raise TropDomainError(f"slot {slot} needs a {kind} profile, got {type(value).__name__}")
    if expected is None and isinstance(value, (PeriodicProfile, AntiPeriodicProfile)):
        raise TropDomainError(f"slot {slot} needs a list of (coeff, shift) pairs")
    return value


def _polynomial(term: Term) -> PLFunction:
    if isinstance(term, ConstantTerm):
        return const(1)
    if isinstance(term, LinearTerm):
        return linear(1)
    if isinstance(term, PsiTerm):
        return Psi()
    if isinstance(term, UpsilonTerm):
        return Upsilon()
    raise TypeError(f"not a polynomial-type term: {term}")


def _exp_bracket(inner: ExpComb, terms: ExpTerms) -> PLFunction:
    exp = trop_exp(inner.base)
    offset = 1 / (1 - inner.base)
    parts = [
        power(Bracket(shift(exp, -Fraction(b)), Fraction(b) + offset), coeff)
        for coeff, b in terms
    ]
    return otimes(*parts) if parts else const(0)


def _term_function(term: Term, params: Params) -> PLFunction:
    if isinstance(term, (ConstantTerm, LinearTerm, PsiTerm, UpsilonTerm)):
        return _polynomial(term)
    if isinstance(term, (PeriodicSlot, AnchoredTerm, PhiTerm, ThetaTerm, OmegaTerm)):
        profile = _slot_value(params, term.id, "periodic")
        if isinstance(term, PeriodicSlot):
            return Periodic(profile)
        if isinstance(term, AnchoredTerm):
            return power(_polynomial(term.inner), profile.anchor)
        return {PhiTerm: Phi, ThetaTerm: Theta, OmegaTerm: Omega}[type(term)](profile)
    if isinstance(term, AntiPeriodicSlot):
        profile = _slot_value(params, term.id, "antiperiodic")
        return stretch(AntiPeriodic(profile), term.dilation)
    if isinstance(term, ExpComb):
        terms = _slot_value(params, term.id, "exp")
        return exp_combination(term.base, terms, term.dilation)
    if isinstance(term, BracketTerm):
        if isinstance(term.inner, AntiPeriodicSlot):
            profile = _slot_value(params, term.inner.id, "antiperiodic")
            return Bracket(AntiPeriodic(profile), profile.x0)
        return _exp_bracket(term.inner, _slot_value(params, term.inner.id, "exp"))
    raise TypeError(f"unknown term {term!r}")


def instantiate(family: SolutionFamily, params: Optional[Params] = None) -> PLFunction:
    """
    Build the concrete function for the given slot assignments.

    Missing slots take the documented defaults.

    Raises:
        OpenFamilyError: If the family is Open.
        TropDomainError: If a slot value has the wrong shape or a bracket
            lattice does not vanish.
    """
    if family.status == FamilyStatus.OPEN:
        raise OpenFamilyError(f"{family.case_label} is open: {family.open_note}")
    params = params or {}
    unknown = set(params) - set(family.slots)
    if unknown:
        logger.warning("ignoring parameters for unknown slots: %s", ", ".join(sorted(unknown)))

    slope = intercept = Fraction(0)
    parts: list[PLFunction] = []
    for scaled in family.terms:
        if isinstance(scaled.term, LinearTerm):
            slope += scaled.coeff
        elif isinstance(scaled.term, ConstantTerm):
            intercept += scaled.coeff
        else:
            parts.append(power(_term_function(scaled.term, params), scaled.coeff))
    if slope or intercept or not parts:
        parts.insert(0, linear(slope, intercept))
    result = otimes(*parts)
    return shift(result, -family.argument_shift)
