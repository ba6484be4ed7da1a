"""Exception types shared across the package."""


class MpanfError(Exception):
    """Base class for all package-specific errors."""


class SeriesTooShortError(MpanfError, ValueError):
    """A series does not have enough observations for the requested operation."""


class DegenerateSeriesError(MpanfError, ValueError):
    """All increments are zero, so the mean absolute increment is undefined."""


class SplitTooSmallError(MpanfError, ValueError):
    """An in/out split would leave too few observations on one side."""


class CsvParseError(MpanfError, ValueError):
    """A CSV row or header could not be parsed.

    Carries the file path, the 1-based file line number where the problem
    was detected (the header is line 1), and a human-readable reason.
    """

    def __init__(self, path, row: int, reason: str):
        self.path = path
        self.row = row
        self.reason = reason
        super().__init__(f"{path}: row {row}: {reason}")


class DuplicateDateError(MpanfError, ValueError):
    """The same calendar date appears more than once in one input file."""


class NoPriorExogenousValueError(MpanfError, ValueError):
    """The exogenous series starts after the target, so forward fill has no seed."""


class LengthMismatchError(MpanfError, ValueError):
    """Two aligned sequences do not have the same length."""


class MissingPredictionsError(MpanfError, ValueError):
    """A direction-dependent forecaster was run without movement predictions."""


class SingularDesignError(MpanfError, ValueError):
    """The least-squares normal system is rank deficient."""


class NonConvergentError(MpanfError, RuntimeError):
    """Parameter search failed to produce a valid estimate."""


class ZeroActualError(MpanfError, ValueError):
    """An actual value of zero makes MAPE undefined."""


class ZeroPairError(MpanfError, ValueError):
    """|actual| + |forecast| is zero at some point, so sMAPE is undefined."""


class BadDistributionError(MpanfError, ValueError):
    """A magnitude distribution spec is unknown or produced invalid draws."""


class TooFewStepsError(MpanfError, ValueError):
    """A Monte Carlo run is too short to contain enough correct and incorrect steps."""


class ExperimentError(MpanfError, RuntimeError):
    """A pipeline stage failed for one configured series."""

    def __init__(self, series: str, stage: str, cause: Exception):
        self.series = series
        self.stage = stage
        self.cause = cause
        super().__init__(f"series {series!r}, stage {stage!r}: {cause}")
