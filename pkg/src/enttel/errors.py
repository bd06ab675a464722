"""Exception types shared across the package."""


class ValidationError(ValueError):
    """An input failed a contract check (bad dimensions, ranges, or structure)."""


class UnreachableOutcomeError(RuntimeError):
    """A measurement branch with (near-)zero probability was conditioned on."""
