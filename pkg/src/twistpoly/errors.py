"""Exception hierarchy shared by every module."""


class TwistPolyError(ValueError):
    """Base class for all library errors."""


class LabelError(TwistPolyError):
    """Duplicate, unknown or malformed element / half-edge label."""


class ImproperError(TwistPolyError):
    """Operation needs a proper set system (at least one feasible set)."""


class HypothesisError(TwistPolyError):
    """Input violates a theorem hypothesis (not a delta-matroid, not binary, not normal)."""


class GuardError(TwistPolyError):
    """Input exceeds an enumeration size guard."""
