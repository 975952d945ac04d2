"""Exception types shared across the package."""


class Su3LabelError(Exception):
    """Base class; `code` is the short name used in structured CLI reports."""

    code = "Error"


class NonIntegral(Su3LabelError):
    code = "NonIntegral"


class NotPhysical(Su3LabelError):
    code = "NotPhysical"


class BoundExceeded(Su3LabelError):
    code = "BoundExceeded"


class ToleranceNotMet(Su3LabelError):
    code = "ToleranceNotMet"


class OutOfRange(Su3LabelError):
    code = "OutOfRange"


class DimensionMismatch(Su3LabelError):
    code = "DimensionMismatch"


class EmptyWindow(Su3LabelError):
    code = "EmptyWindow"


class NotARoot(Su3LabelError):
    code = "NotARoot"


class PoleHit(Su3LabelError):
    code = "PoleHit"


class NonSimpleRoots(Su3LabelError):
    code = "NonSimpleRoots"


class Underdetermined(Su3LabelError):
    code = "Underdetermined"
