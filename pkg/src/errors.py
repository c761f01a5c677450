"""
Exception types shared by every HexHarmonic module.
"""


class HexHarmonicError(Exception):
    """Base class for all library errors."""


class UsageError(HexHarmonicError, ValueError):
    """A parameter violates the precondition of an operation."""


class NumericalError(HexHarmonicError, ArithmeticError):
    """A numerical post-condition was breached (non-finite value, imaginary residue)."""
