"""Numerical tolerances shared by every stage of the analysis."""

from dataclasses import asdict, dataclass


class AnalysisError(Exception):
    """Base class for errors raised on bad input graphs."""


class ParseError(AnalysisError):
    pass


class DisconnectedGraphError(AnalysisError):
    pass


class IrregularGraphError(AnalysisError):
    pass


class InternalConsistencyError(AnalysisError):
    """Raised when numbers that theory fixes come out wrong (corrupted input)."""


@dataclass(frozen=True)
class Tolerances:
    """Default tolerances; every report echoes the values it was run with.

    ``group`` is relative to ``max(1, spectral radius)``. ``eq`` is relative
    to the target value of the harmonic-mean gate. ``matrix`` is an absolute
    entrywise bound for matrix identities such as ``A_D = sum p_i(A)``.
    """

    group: float = 1e-9
    eq: float = 1e-6
    matrix: float = 1e-6
    hoffman: float = 1e-7
    regularity: float = 1e-7

    def __post_init__(self):
        for name, value in asdict(self).items():
            if not value >= 0:
                raise ValueError(f"tolerance {name} must be nonnegative, got {value}")
        if self.group <= 0:
            raise ValueError("grouping tolerance must be positive")

    def as_dict(self):
        return asdict(self)


DEFAULT_TOLERANCES = Tolerances()
