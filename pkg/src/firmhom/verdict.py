"""Three-valued verdicts with a certification level."""

CERTIFIED = "CERTIFIED"
HEURISTIC = "HEURISTIC"
NOT_APPLICABLE = "NOT-APPLICABLE"


class Verdict:
    """value is True, False or None (not applicable / inconclusive)."""

    __slots__ = ("value", "certification", "reason", "data")

    def __init__(self, value, reason="", certification=None, **data):
        self.value = value
        if certification is None:
            certification = NOT_APPLICABLE if value is None else CERTIFIED
        self.certification = certification
        self.reason = reason
        self.data = data

    @classmethod
    def yes(cls, reason="", **data):
        return cls(True, reason, **data)

    @classmethod
    def no(cls, reason="", **data):
        return cls(False, reason, **data)

    @classmethod
    def not_applicable(cls, reason="", **data):
        return cls(None, reason, NOT_APPLICABLE, **data)

    def __bool__(self):
        return self.value is True

    @property
    def applicable(self):
        return self.certification != NOT_APPLICABLE

    def label(self):
        if self.value is None:
            return self.certification
        return "YES" if self.value else "NO"

    def __eq__(self, other):
        if isinstance(other, Verdict):
            return self.value == other.value and self.certification == other.certification
        if isinstance(other, bool) or other is None:
            return self.value is other
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.certification))

    def __repr__(self):
        extra = (" (%s)" % self.reason) if self.reason else ""
        return "Verdict(%s%s)" % (self.label(), extra)
