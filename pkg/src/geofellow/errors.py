class ParseError(ValueError):
    """Malformed word text. Carries the offset of the offending token."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class ResourceBoundError(ValueError):
    """A request exceeded one of the hard search bounds."""
