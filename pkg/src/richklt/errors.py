"""Exception hierarchy.

Every error raised on bad input derives from ``RichKLTError`` so the CLI can
map them all to exit code 2 in one place.
"""


class RichKLTError(ValueError):
    """Base class for input and precondition errors."""


class NotGCM(RichKLTError):
    pass


class NotSymmetrizable(RichKLTError):
    pass


class DimensionMismatch(RichKLTError):
    pass


class IndexOutOfRange(RichKLTError):
    pass


class MixedRootData(RichKLTError):
    pass


class NotComparable(RichKLTError):
    pass


class NotACover(RichKLTError):
    pass


class NTooSmall(RichKLTError):
    pass


class NotDominant(RichKLTError):
    pass


class DimensionZero(RichKLTError):
    pass


class LengthMismatch(RichKLTError):
    pass


class SectionIdenticallyZero(RichKLTError):
    pass


class NotReduced(RichKLTError):
    pass


class WrongField(RichKLTError):
    pass


class NotPrime(RichKLTError):
    pass


class NotHomogeneous(RichKLTError):
    pass


class NotNested(RichKLTError):
    pass


class UnsupportedRank(RichKLTError):
    pass
