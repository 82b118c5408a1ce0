"""Exception types.  Every error carries a stable upper-case ``code``."""


class PackingError(Exception):
    code = "ERROR"

    def __init__(self, message="", code=None):
        super().__init__(message)
        if code is not None:
            self.code = code

    def __str__(self):
        msg = super().__str__()
        return f"{self.code}: {msg}" if msg else self.code


class GraphError(PackingError):
    """Bad edge lists: EDGE_OUT_OF_RANGE, SELF_LOOP, DUPLICATE_EDGE, EMPTY_GRAPH."""


class MalformedGraph6(PackingError):
    code = "MALFORMED_GRAPH6"


class NotSubcubic(PackingError):
    code = "NOT_SUBCUBIC"


class SequenceError(PackingError):
    """NOT_NONDECREASING, EMPTY, NONPOSITIVE."""


class ColoringError(PackingError):
    """PARTIAL_COLORING, CLASS_OUT_OF_RANGE."""


class TooLarge(PackingError):
    code = "TOO_LARGE"


class BudgetExceeded(PackingError):
    code = "BUDGET"


class UnknownFixture(PackingError):
    code = "UNKNOWN_FIXTURE"


class NotInClass(PackingError):
    code = "NOT_IN_CLASS"


class StructureViolation(PackingError):
    code = "STRUCTURE_VIOLATION"


class ExtensionStuck(PackingError):
    code = "EXTENSION_STUCK"


class ConstructionFailed(PackingError):
    """A pipeline produced a coloring that does not verify.

    ``trace`` holds the full text report (independent set, path
    decomposition, bad sets, partition) for debugging.
    """

    code = "CONSTRUCTION_FAILED"

    def __init__(self, message="", trace=""):
        super().__init__(message)
        self.trace = trace
