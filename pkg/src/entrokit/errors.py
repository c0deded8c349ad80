"""Exception types shared across the package."""


class EntrokitError(Exception):
    """Base class for all errors raised by entrokit."""

    #: pipeline axis that failed ("outcome_space", "probabilities", ...);
    #: filled in by the composed entry points.
    axis = None


class InputTooShortError(EntrokitError):
    def __init__(self, required, got, what="input"):
        self.required = int(required)
        self.got = int(got)
        super().__init__(
            f"{what} too short: need at least {self.required} samples, got {self.got}"
        )


class NonFiniteDataError(EntrokitError):
    def __init__(self, index):
        self.index = index
        super().__init__(f"non-finite value in input data at flat index {index}")


class UncountableOutcomeSpaceError(EntrokitError):
    """The outcome space has no a-priori cardinality (needs data, or none at all)."""


class NonCountingSpaceError(EntrokitError):
    """Operation requires a counting-based outcome space."""


class CardinalityOverflowError(EntrokitError):
    """Outcome-space cardinality exceeds 2^63 - 1."""


class EmptyCountsError(EntrokitError):
    """No observed outcomes (zero windows)."""


class InvalidPMFError(EntrokitError):
    """Vector is not a probability mass function."""


class IncompatibleEstimatorError(EntrokitError):
    """Estimator cannot be combined with this measure definition or space."""


class NotNormalizableError(EntrokitError):
    """The measure has no usable maximum to normalize by."""


class DegenerateSpaceError(EntrokitError):
    """Normalization impossible: the measure maximum is zero (single outcome)."""


class UndefinedResultError(EntrokitError):
    """The estimator's defining ratio is undefined for this input (e.g. no matches)."""


class ConfigError(EntrokitError):
    """Invalid recipe configuration."""


class IngestError(EntrokitError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DegenerateDistanceWarning(UserWarning):
    """Zero nearest-neighbor distances were clamped to machine epsilon."""
