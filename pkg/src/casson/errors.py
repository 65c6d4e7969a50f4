class CassonError(ValueError):
    """Base class for input and validation errors raised by this package."""


class GenusMismatchError(CassonError):
    pass


class NotSymplecticError(CassonError):
    pass


class BlockFormError(CassonError):
    """A matrix does not have the block shape an operation requires."""


class NotTorelliError(CassonError):
    """Raised when the Johnson homomorphism is asked about a non-Torelli factor."""


class AnnotationError(CassonError):
    """An annotated gluing word is missing or contradicts an F annotation.

    ``block`` is the offending block index, when known.
    """

    def __init__(self, message: str, block: int | None = None):
        if block is not None:
            message = f"block {block}: {message}"
        super().__init__(message)
        self.block = block


class SeifertError(CassonError):
    pass
