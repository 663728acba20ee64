"""Exception hierarchy.

Every domain failure is a subclass of :class:`ToricSchubertError`, so the CLI
can turn it into a structured error document with exit status 1.
"""


class ToricSchubertError(ValueError):
    """Base class for domain errors."""

    @property
    def code(self) -> str:
        return type(self).__name__


class InvalidRank(ToricSchubertError):
    pass


class IndexOutOfRange(ToricSchubertError):
    pass


class MismatchedRootSystem(ToricSchubertError):
    pass


class NotReduced(ToricSchubertError):
    pass


class NotCoxeterType(ToricSchubertError):
    pass


class NotMinCosetRep(ToricSchubertError):
    pass


class NotBelow(ToricSchubertError):
    pass


class NotDistinguished(ToricSchubertError):
    pass


class NotPointed(ToricSchubertError):
    pass


class ZeroVector(ToricSchubertError):
    pass


class NotSimplyLaced(ToricSchubertError):
    pass


class NotBounded(ToricSchubertError):
    pass


class NotLattice(ToricSchubertError):
    pass


class FactorizationFails(ToricSchubertError):
    pass


class CapExceeded(ToricSchubertError):
    pass


class InconsistentFamily(ToricSchubertError):
    """The two independent definitions of a feasible family disagree."""
