"""Exception hierarchy shared by all modules."""


class SemistarError(Exception):
    """Base class for all library errors."""


class ModelMismatch(SemistarError):
    """Operands belong to different domain models."""


class RawOutsideFamily(SemistarError):
    """Generators do not denote a member of the model's closed descriptor family."""


class ZeroModule(SemistarError):
    """The input denotes the zero module, which has no descriptor."""


class NotAnOverring(SemistarError):
    """T is not a multiplicatively closed descriptor containing D."""


class OverringNotInCatalogue(SemistarError):
    """The overring is valid but has no catalogue model of its own."""


class TrivialOperation(SemistarError):
    """The operation sends D to K; spectrum machinery is undefined for it."""


class CutoffNotStabilized(SemistarError):
    """A finite-type supremum did not stabilize within the configured cutoff."""


class SearchExhausted(SemistarError):
    """A bounded existential search was inconclusive (never 'absent')."""


class NotFractional(SemistarError):
    """The descriptor is not a fractional ideal."""


class NotClosed(SemistarError):
    """The descriptor is not closed under the given operation."""


class NotFiniteType(SemistarError):
    """The operation is not of finite type."""


class NotFinitelyGenerated(SemistarError):
    """The descriptor is not finitely generated."""


class NotInvertibleExtension(SemistarError):
    """The extended Nagata ideal of the generator list is not invertible."""


class ParseError(SemistarError):
    """A literal or scenario file failed to parse."""

    def __init__(self, message: str, position: object = None):
        super().__init__(message if position is None else f"{message} (at {position})")
        self.position = position
