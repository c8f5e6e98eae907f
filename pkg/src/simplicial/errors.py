"""Exception types shared across the package."""


class SimplicialError(Exception):
    """Base class for every error this package raises on purpose."""


class InputError(SimplicialError, ValueError):
    """Malformed argument, or an operation applied outside its contract."""


class ClassificationError(SimplicialError):
    """A required structural class check failed on the input.

    Raised by operations whose meaning depends on the input belonging to a
    class (flag, pseudomanifold, ...) when the membership test fails.  The
    failed check name and its witness are kept so callers can report them.
    """

    def __init__(self, check, witness=None, message=""):
        self.check = check
        self.witness = witness
        super().__init__(message or f"input fails required check: {check}")


class ResourceLimitError(SimplicialError):
    """An enumeration exceeded its configured candidate cap."""


class InternalInvariantError(SimplicialError):
    """A state that the construction's own arguments rule out was reached.

    Seeing this exception means a bug (or an input outside the regime the
    construction is proven for), never a property of a valid input.
    """
