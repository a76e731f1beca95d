"""Exception types shared across the package."""


class ThompsonOrdersError(ValueError):
    """Base class for every error this package raises on bad input."""


class ParseError(ThompsonOrdersError):
    """Malformed text input; carries the offending character position."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"position {position}: {message}")
        self.position = position


class NotDyadic(ThompsonOrdersError):
    """A coordinate is not a dyadic rational."""


class NotPowerOfTwoSlope(ThompsonOrdersError):
    """A linear piece has a slope that is not an integer power of two."""


class NotMonotone(ThompsonOrdersError):
    """Breakpoints fail to increase strictly in both coordinates."""


class BadEndpoints(ThompsonOrdersError):
    """A breakpoint map does not run from (0,0) to (1,1)."""


class BadInterval(ThompsonOrdersError):
    """Not a closed dyadic subinterval of [0,1] with distinct endpoints."""


class OutOfRange(ThompsonOrdersError):
    """Point outside the domain [0,1]."""


class RadiusTooLarge(ThompsonOrdersError):
    """Ball radius beyond the supported desk-scale cap."""


class IdentityInput(ThompsonOrdersError):
    """The identity element is not a valid argument here."""


class IdentityReference(ThompsonOrdersError):
    """The identity element cannot serve as a reference element."""
