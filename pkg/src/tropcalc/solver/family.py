from dataclasses import dataclass, field
from typing import Any, Optional

from ..models import FamilyStatus
from .chain import Stage
from .equation import EquationSpec
from .factor import CubicReduction
from .terms import ScaledTerm


@dataclass(frozen=True)
class SolutionFamily:
    """
    A closed-form solution family of an EquationSpec.

    Attributes:
        spec: The equation as given, before trimming.
        status: Complete, PartialKnown or Open.
        case_label: Case of the solution theory, e.g. "ThmB(3)".
        terms: Scaled terms; free parameters appear as slots.
        open_note: Why the family is not Complete, if it is not.
        argument_shift: Leading zero coefficients removed; solutions are
            z(x - argument_shift) for z built from the terms.
        stages: First-order and even stages used to build the terms.
        cubic: Roots of the cubic for s = 3 with non-zero coefficient sum.
    """

    spec: EquationSpec
    status: FamilyStatus
    case_label: str
    terms: tuple[ScaledTerm, ...]
    open_note: Optional[str] = None
    argument_shift: int = 0
    stages: tuple[Stage, ...] = field(default=())
    cubic: Optional[CubicReduction] = None

    @property
    def slots(self) -> dict[str, str]:
        """Slot id -> kind of the free parameter ('periodic', 'antiperiodic' or 'exp')."""
        kinds: dict[str, str] = {}
        for stage in self.stages:
            if stage.kind == "even":
                kinds[stage.slot] = "antiperiodic" if stage.root == -1 else "exp"
            elif stage.root == 1:
                kinds[stage.slot] = "periodic"
            elif stage.root == -1:
                kinds[stage.slot] = "antiperiodic"
            else:
                kinds[stage.slot] = "exp"
        used = {scaled.term.slot for scaled in self.terms}
        return {slot: kind for slot, kind in kinds.items() if slot in used}

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "status": self.status.display_name,
            "case_label": self.case_label,
            "open_note": self.open_note,
            "argument_shift": self.argument_shift,
            "coefficients": [str(n) for n in self.spec.coefficients],
            "rhs": str(self.spec.rhs),
            "rhs_slope": str(self.spec.rhs_slope),
            "terms": [scaled.to_dict() for scaled in self.terms],
            "slots": self.slots,
            "stages": [stage.to_dict() for stage in self.stages],
        }
        if self.cubic is not None:
            data["cubic"] = self.cubic.to_dict()
        return data

    def __str__(self) -> str:
        body = " + ".join(str(scaled) for scaled in self.terms) or "0"
        if self.argument_shift:
            body = f"z(x - {self.argument_shift}) with z = {body}"
        return f"[{self.case_label}] {self.status.display_name}: y = {body}"
