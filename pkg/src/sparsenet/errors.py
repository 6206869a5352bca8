"""Exception hierarchy shared across the package."""


class SparseNetError(Exception):
    """Base class for all errors raised by sparsenet."""


class LayoutError(SparseNetError, ValueError):
    """A tensor arrived in the wrong memory layout."""


class ShapeError(SparseNetError, ValueError):
    """Dimensions are inconsistent or unsupported."""


class FormatError(SparseNetError, ValueError):
    """A sparse matrix or mask violates its structural invariants."""


class ModelFileError(SparseNetError):
    """Base class for model file decoding failures."""


class BadMagicError(ModelFileError):
    pass


class UnsupportedVersionError(ModelFileError):
    pass


class ChecksumError(ModelFileError):
    pass


class TruncatedError(ModelFileError):
    pass


class InvariantError(ModelFileError):
    """The file decoded but its contents are not a valid model."""


class ConversionError(SparseNetError, ValueError):
    """A dense weight dump cannot be converted under the requested plan."""


class SelfCheckError(SparseNetError):
    """The fast kernel self-check failed; benchmarks refuse to run."""
