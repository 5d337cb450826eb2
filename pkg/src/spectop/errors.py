"""Exception hierarchy.

Everything raised for a mathematically invalid request derives from
:class:`DomainError`; grammar problems derive from :class:`GrammarError`.
The CLI maps the first to exit code 1 and the second to exit code 2.
"""


class SpectopError(Exception):
    pass


class DomainError(SpectopError, ValueError):
    """The request is well formed but has no valid answer."""


class GrammarError(SpectopError, ValueError):
    """A ring, element, or set string does not parse."""


class RingMismatchError(DomainError):
    pass


class ZeroElementError(DomainError):
    pass


class RefusedError(DomainError):
    """Finiteness of a set is unknown and the operation will not guess."""


class PreconditionError(DomainError):
    pass


class InvalidDescriptorError(DomainError):
    pass


class NoWitnessError(DomainError):
    pass


class BoundsError(DomainError):
    pass
