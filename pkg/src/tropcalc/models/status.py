from enum import IntEnum


class FamilyStatus(IntEnum):
    """
    How much of the solution set a family describes.

    Ordered from strongest to weakest claim, so max() of two statuses is the
    weaker one.
    """

    COMPLETE = 0
    PARTIAL_KNOWN = 1
    OPEN = 2

    @property
    def display_name(self) -> str:
        names = {
            FamilyStatus.COMPLETE: "Complete",
            FamilyStatus.PARTIAL_KNOWN: "PartialKnown",
            FamilyStatus.OPEN: "Open",
        }
        return names[self]

    def weaker(self, other: "FamilyStatus") -> "FamilyStatus":
        return max(self, other)

    @classmethod
    def from_string(cls, name: str) -> "FamilyStatus":
        """
        Parse a status name.

        Accepts display names, lowercase and snake_case forms.
        Raises ValueError if not found.
        """
        normalized = name.lower().strip().replace("_", "").replace("-", "")
        aliases = {
            "complete": cls.COMPLETE,
            "partialknown": cls.PARTIAL_KNOWN,
            "partial": cls.PARTIAL_KNOWN,
            "open": cls.OPEN,
        }
        if normalized not in aliases:
            valid = ", ".join(sorted(aliases))
            raise ValueError(f"Unknown status: {name}. Valid options: {valid}")
        return aliases[normalized]


class BruckAlternative(IntEnum):
    """Which tail behaviour a Brück-type equation exhibits on the checked window."""

    NEG_TAIL = 1
    POS_TAIL = 2
    BOTH_TAILS = 3
    INCONCLUSIVE = 4

    @property
    def display_name(self) -> str:
        names = {
            BruckAlternative.NEG_TAIL: "NegTail",
            BruckAlternative.POS_TAIL: "PosTail",
            BruckAlternative.BOTH_TAILS: "BothTails",
            BruckAlternative.INCONCLUSIVE: "Inconclusive",
        }
        return names[self]

