"""Exception types raised across the package."""


class InvalidSpecError(ValueError):
    """A family spec has out-of-range parameters or cannot be parsed."""


class Graph6Error(ValueError):
    """Malformed graph6 input. ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class OrderGuardError(ValueError):
    """The graph is larger than an exhaustive routine is willing to handle."""


class ColouringError(ValueError):
    """A colouring does not fit the graph it was paired with."""
