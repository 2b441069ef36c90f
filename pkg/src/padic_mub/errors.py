"""Exception types shared across the package."""


class PrecisionError(ValueError):
    """A value does not carry enough significant digits for the operation."""


class ResolutionError(ValueError):
    """A grid is too coarse for the requested function to be cell-constant."""


class CapError(RuntimeError):
    """An exhaustive computation would exceed its configured size cap."""


class OddPrimeError(ValueError):
    """Raised where a closed-form norm formula requires p != 2."""

    def __init__(self, context: str = "closed-form quadratic Gauss norm"):
        super().__init__(
            f"{context} requires an odd prime: the case analysis relies on "
            "2 being invertible, so p = 2 is outside its hypothesis"
        )
