"""Exception hierarchy shared by all modules."""


class DarbouxError(Exception):
    """Base class for every error raised by this package."""


class FieldMismatchError(DarbouxError):
    """Operands live in different quadratic fields."""


class FieldExtensionNeeded(DarbouxError):
    """A root of a leading coefficient is not in the working field."""


class CompositionDivergence(DarbouxError):
    """Inner series of a composition does not vanish at the base point."""


class ParameterError(DarbouxError):
    """Hypergeometric parameters outside the domain of an operation."""


class PathDegeneracyError(DarbouxError):
    """A contiguous relation hit its excluded parameter value."""

    def __init__(self, step, params):
        self.step = step
        self.params = params
        super().__init__(
            f"degenerate step {step} at (A,B,C)=(" + ", ".join(str(p) for p in params) + ")"
        )


class UnsupportedSupportError(DarbouxError):
    """Divisor support contains points an operation cannot handle."""


class ClassificationError(DarbouxError):
    """A point or triple cannot be named."""


class InconsistentBranchingError(DarbouxError):
    """Branching data violates the Hurwitz formula."""


class BasePointError(DarbouxError):
    """A covering does not vanish at the base point."""


class CatalogError(DarbouxError):
    """Malformed catalog file or record."""
