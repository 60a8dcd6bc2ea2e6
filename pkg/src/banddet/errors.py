"""Exception types shared across the package."""


class MixedRingError(TypeError):
    """Binary operation applied to elements of different rings."""


class DivisibilityError(ArithmeticError):
    """An integer quotient inside a closed form failed to divide exactly.

    Unreachable for valid inputs; raising it means a parameter or
    transcription bug.
    """


class InexactDivisionError(ArithmeticError):
    """An exact division left a remainder where none is possible."""


class SizeLimitError(RuntimeError):
    """Order exceeds a cost guard for an exponential-time routine."""


class ParityError(ArithmeticError):
    """per + det turned out odd, or a parity census is inconsistent."""


class InvalidPermutationError(ValueError):
    """Sequence is not a permutation of 1..n in one-line notation."""
