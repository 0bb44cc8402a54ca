"""Exception types raised by sparsedft.

All of them derive from ``ValueError`` so callers that only care about bad
input can catch that.
"""


class SparseDFTError(ValueError):
    """Base class for validation errors in this package."""


class InvalidPanelError(SparseDFTError):
    pass


class InvalidSequenceError(SparseDFTError):
    pass


class DomainError(SparseDFTError):
    pass


class InvalidPartitionError(SparseDFTError):
    pass


class InvalidCountError(SparseDFTError):
    pass


class InvalidRatioError(SparseDFTError):
    pass


class InvalidCutoffError(SparseDFTError):
    pass


class CostGuardError(SparseDFTError):
    """Brute-force summation refused because the range is too long."""


class SingularParameterError(SparseDFTError):
    pass


class DivergentSeriesError(SparseDFTError):
    pass
