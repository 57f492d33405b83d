"""Exception hierarchy shared across the pipeline.

Configuration and input-validation problems map to CLI exit code 2,
everything else (runtime/numeric failures) to exit code 1.
"""


class TracelinkError(Exception):
    """Base class for all errors raised by this package."""


class LoadError(TracelinkError):
    """A dataset file or manifest could not be read."""


class ValidationError(TracelinkError):
    """Input data violates a structural constraint (duplicate ids, bad oracle refs, ...)."""


class ConfigError(TracelinkError):
    """A run configuration is invalid (unknown model, bad mode name, ...)."""


class ParseError(TracelinkError):
    """A structured input file is malformed; message carries the line number."""


class EvaluationError(TracelinkError):
    """Metric computation was asked for an undefined quantity (e.g. empty oracle)."""


class NumericError(TracelinkError):
    """A numeric routine failed to converge or produced an unusable result."""
