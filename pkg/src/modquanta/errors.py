class InvalidInput(ValueError):
    """Raised for malformed or inconsistent arguments (bad residues, mismatched moduli...)."""


class CapacityError(RuntimeError):
    """Raised when an exhaustive search would exceed the supported size."""
