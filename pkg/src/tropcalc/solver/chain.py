"""
Reduction of P(E) y = rhs to a chain of first-order stages.

Every stage solves (E - root) F = R for the right-hand side R left by the
previous stage and adds the free solution of (E - root) F = 0 in a new
slot. A final even stage handles an irreducible factor E^2 - mu.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from ..models import FamilyStatus
from .factor import Factorization
from .terms import AntiPeriodicSlot, Combination, ExpComb, PeriodicSlot, Term

logger = logging.getLogger(__name__)


class UnresolvedResonance(Exception):
    """A resonant term without a closed-form ladder."""

    def __init__(self, term: Term, root: Fraction):
        self.term = term
        self.root = root
        super().__init__(f"{term} is resonant with root {root} and has no closed-form antidifference")


@dataclass(frozen=True)
class Stage:
    """One step of the chain: (E - root) for kind 'first_order', (E^2 - root) for 'even'."""

    kind: str
    root: Fraction
    slot: str

    def to_dict(self) -> dict[str, Any]:
        return {"kind": self.kind, "root": str(self.root), "slot": self.slot}


@dataclass
class ChainResult:
    combination: Combination
    stages: list[Stage]
    status: FamilyStatus = FamilyStatus.COMPLETE
    notes: list[str] = field(default_factory=list)


def first_order_particular(rhs: Combination, root: Fraction) -> Combination:
    """
    A particular solution of (E - root) F = rhs.

    Raises:
        UnresolvedResonance: If some resonant term cannot be raised.
    """
    result = Combination()
    for term, coeff in rhs.items():
        result = result + _solve_term(term, root).scaled(coeff)
    return result


def _solve_term(term: Term, root: Fraction) -> Combination:
    mu, lower = term.shift_rule()
    if mu != root:
        a = 1 / (mu - root)
        return Combination.single(term, a) + first_order_particular(lower.scaled(-a), root)
    rung = term.ladder()
    if rung is None:
        raise UnresolvedResonance(term, root)
    raised, extra = rung
    return raised + first_order_particular(extra.scaled(-1), root)


def even_particular(rhs: Combination, mu: Fraction) -> Combination:
    """A particular solution of (E^2 - mu) F = rhs for mu not a rational square."""
    result = Combination()
    for term, coeff in rhs.items():
        result = result + _solve_term_even(term, mu).scaled(coeff)
    return result


def _solve_term_even(term: Term, mu: Fraction) -> Combination:
    factor, lower = term.shift_rule()
    rest = lower.scaled(factor) + lower.shifted()
    a = 1 / (factor * factor - mu)
    return Combination.single(term, a) + even_particular(rest.scaled(-a), mu)


def _homogeneous(stage: Stage) -> Term:
    if stage.kind == "even":
        if stage.root == -1:
            return AntiPeriodicSlot(stage.slot, dilation=2)
        return ExpComb(stage.root, stage.slot, dilation=2)
    if stage.root == 1:
        return PeriodicSlot(stage.slot)
    if stage.root == -1:
        return AntiPeriodicSlot(stage.slot)
    return ExpComb(stage.root, stage.slot)


def plan_stages(factorization: Factorization) -> list[Stage]:
    """
    Order the stages: roots other than +-1 first, then -1, then 1, then the
    even factor if any. Slot ids are P1, X1, E1 ... numbered in chain order.
    """
    roots = factorization.roots
    ordered = [r for r in roots if r not in (-1, 1)] + [r for r in roots if r == -1] + [r for r in roots if r == 1]
    counters = {"P": 0, "X": 0, "E": 0}
    stages = []

    def next_slot(prefix: str) -> str:
        counters[prefix] += 1
        return f"{prefix}{counters[prefix]}"

    for root in ordered:
        prefix = "P" if root == 1 else "X" if root == -1 else "E"
        stages.append(Stage("first_order", root, next_slot(prefix)))
    mu = factorization.even_square
    if mu is not None:
        stages.append(Stage("even", mu, next_slot("X" if mu == -1 else "E")))
    return stages


def run_chain(rhs: Combination, stages: list[Stage]) -> ChainResult:
    """
    Push rhs through the stages.

    A resonance without a closed form drops the offending slot from the
    right-hand side and marks the family PartialKnown; one without a slot
    leaves no known particular solution and marks it Open.
    """
    result = ChainResult(Combination(), stages)
    current = rhs
    for index, stage in enumerate(stages, start=1):
        solve = even_particular if stage.kind == "even" else first_order_particular
        while True:
            try:
                particular = solve(current, stage.root)
                break
            except UnresolvedResonance as exc:
                slot = exc.term.slot
                if slot is None:
                    result.status = FamilyStatus.OPEN
                    result.notes.append(
                        f"stage {index} (root {stage.root}): no particular solution in closed form for {exc.term}"
                    )
                    logger.info("chain stopped at stage %d: %s", index, exc)
                    result.combination = Combination()
                    return result
                result.status = result.status.weaker(FamilyStatus.PARTIAL_KNOWN)
                result.notes.append(
                    f"stage {index} (root {stage.root}): {exc}; slot {slot} restricted to zero"
                )
                logger.info("dropping slot %s at stage %d", slot, index)
                current = current.without_slot(slot)
        current = particular + Combination.single(_homogeneous(stage))
        logger.debug("stage %d (%s, %s): %s", index, stage.kind, stage.root, current)
    result.combination = current
    return result
