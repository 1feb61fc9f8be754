"""Exception hierarchy shared by all modules."""


class VactabError(ValueError):
    """Base class; every error raised by this package derives from it."""


class ParseError(VactabError):
    pass


class InvalidCorner(VactabError):
    """A cell cannot be added to / removed from the requested row."""


class RuleViolation(VactabError):
    """Local growth rule inputs match none of the forward/backward cases."""


class InvalidBoundary(VactabError):
    pass


class InvalidFilling(VactabError):
    pass


class SizeMismatch(VactabError):
    pass


class BadEndpoints(VactabError):
    pass


class OutOfRange(VactabError):
    pass


class PropertyViolation(VactabError):
    """A filling lies outside the family a bijection is defined on."""


class ShapeMismatch(VactabError):
    pass


class BadShape(VactabError):
    pass


class TooManyBlocks(VactabError):
    pass


class WrongBlockCount(VactabError):
    pass


class NotInFamily(VactabError):
    pass


class NTooSmall(VactabError):
    pass


class BadParams(VactabError):
    pass
