"""Exception types shared across the package."""


class NscrushError(Exception):
    """Base class for all package errors."""


class GluingFormatError(NscrushError):
    """Raised when a gluing file cannot be parsed.

    Carries the 1-based line number of the offending line when known.
    """

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = "line {}: {}".format(line, message)
        super().__init__(message)


class InvolutionError(NscrushError):
    """The gluing relation is not a fixed-point-free involution on faces."""

    def __init__(self, message, faces=None):
        self.faces = faces
        super().__init__(message)


class InvalidTriangulationError(NscrushError):
    """An operation required a valid (manifold, orientable, ...) complex."""


class AdmissibilityError(NscrushError):
    """A coordinate vector is not an admissible normal-surface vector."""


class BudgetExceededError(NscrushError):
    """An exhaustive scan would exceed its configured work budget."""


class CrushFailure(NscrushError):
    """Collapsing a normal sphere produced an unusable result.

    This is a recoverable signal: the caller may retry with a different
    sphere.  `defect` names the check that failed, `detail` carries the
    offending data.
    """

    def __init__(self, defect, detail=""):
        self.defect = defect
        self.detail = detail
        super().__init__("{}: {}".format(defect, detail) if detail else defect)


class DecompositionError(NscrushError):
    """Decomposition could not complete (every candidate sphere failed)."""
