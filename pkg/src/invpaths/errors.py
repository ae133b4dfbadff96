"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of a map (wrong family, wrong endpoint)."""


class BoundError(ValueError):
    """A requested size exceeds the exhaustive-enumeration bound."""

    def __init__(self, what: str, n: int, bound: int, quantity: str = "n"):
        super().__init__(f"{what}: {quantity} {n} exceeds the desk-scale bound {bound}")
        self.n = n
        self.bound = bound


class ParseError(ValueError):
    """Malformed text input; ``position`` is 1-based."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)
        self.position = position
