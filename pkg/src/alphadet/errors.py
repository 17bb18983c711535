"""Shared error types."""


class SizeLimitError(ValueError):
    """Raised when a requested computation exceeds its configured size bound."""

    def __init__(self, what: str, requested: int, bound: int, cost_hint: str = ""):
        self.requested = requested
        self.bound = bound
        msg = f"{what}: n={requested} exceeds bound {bound}"
        if cost_hint:
            msg += f" ({cost_hint})"
        super().__init__(msg)
