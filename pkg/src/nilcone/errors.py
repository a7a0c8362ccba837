"""Exception hierarchy.

Every domain failure raised by the package derives from :class:`NilconeError`,
which lets the command-line front end map them all to exit status 1.
"""


class NilconeError(ValueError):
    """Base class for domain errors."""


class WeightMismatch(NilconeError):
    pass


class NotUnitriangular(NilconeError):
    pass


class InvalidClass(NilconeError):
    pass


class TotalMismatch(NilconeError):
    pass


class InvalidGenus(NilconeError):
    pass


class IncompatibleXi(NilconeError):
    pass


class UnknownEntries(NilconeError):
    pass


class MassMismatch(NilconeError):
    pass


class TrailingZero(NilconeError):
    pass


class NegativeRank(NilconeError):
    pass


class UnsupportedRank(NilconeError):
    pass


class UnsupportedMixedType(NilconeError):
    pass


class NotInDictionary(NilconeError):
    pass
