class CCRKError(Exception):
    """Base class for all library errors."""


class LabelError(CCRKError, ValueError):
    pass


class MalformedFacetError(CCRKError, ValueError):
    pass


class UnknownVertexError(CCRKError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class NotSimplicialError(CCRKError, ValueError):
    pass


class NotASphereError(CCRKError, ValueError):
    pass


class TheoremViolation(CCRKError, AssertionError):
    """A property that must hold for the construction came out false."""


class FacetFileError(CCRKError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
