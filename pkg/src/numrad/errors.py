"""Exception hierarchy shared by every numrad module."""


class NumradError(Exception):
    """Base class for all errors raised by numrad."""


class InvalidMatrixError(NumradError, ValueError):
    """Input is not a finite square complex matrix."""


class DimensionMismatchError(NumradError, ValueError):
    """Operands have incompatible dimensions."""


class NotHermitianError(InvalidMatrixError):
    pass


class NotPSDError(InvalidMatrixError):
    """Hermitian input has an eigenvalue below the clamping threshold."""


class UnknownRelationError(NumradError, KeyError):
    pass


class SignatureMismatchError(NumradError, ValueError):
    """Inputs do not match the relation's declared signature."""


class PreconditionError(NumradError, ValueError):
    """Inputs fail the relation's structural precondition."""


class RelationKindError(NumradError, ValueError):
    pass


class MatrixFileError(NumradError):
    """Base for matrix/vector file problems; carries the offending path."""

    def __init__(self, path, message):
        self.path = str(path)
        super().__init__(f"{self.path}: {message}")


class MissingFileError(MatrixFileError):
    pass


class MalformedFileError(MatrixFileError):
    pass


class FileDimensionError(MatrixFileError):
    pass


class NonFiniteEntryError(MatrixFileError):
    pass
