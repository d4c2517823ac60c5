"""Exception types shared across the library."""


class NeuroplasticError(Exception):
    """Base class for all library errors."""


class EmptyTensorError(NeuroplasticError):
    """A reduction was requested on a tensor with no elements."""


class ShapeMismatchError(NeuroplasticError):
    """Binary op or state update received tensors of different shapes."""


class InvalidBoundsError(NeuroplasticError):
    """Clip called with lo > hi."""


class NonFiniteGradientError(NeuroplasticError):
    """A gradient contained NaN or Inf."""


class DivergedStateError(NeuroplasticError):
    """A parameter update produced non-finite values."""


class InvalidLabelError(NeuroplasticError):
    """A class label fell outside [0, num_classes)."""


class InvalidFractionError(NeuroplasticError):
    """Subsample fraction outside (0, 1]."""


class BadMagicError(NeuroplasticError):
    """IDX file magic number did not match the expected type code."""


class TruncatedFileError(NeuroplasticError):
    """IDX file ended before the declared payload."""


class CountMismatchError(NeuroplasticError):
    """Image and label files declare different example counts."""


class EmptyInputError(NeuroplasticError):
    """Summary requested over an empty record collection."""


class ConfigError(NeuroplasticError):
    """Experiment configuration is malformed or inconsistent."""
