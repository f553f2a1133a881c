"""Exception hierarchy.

Everything raised deliberately by the library derives from
:class:`HolonomicaError`.  :class:`PreconditionError` marks inputs that are
well formed but violate an operation's precondition; the CLI maps it to
exit code 3, and :class:`ParseError` to exit code 2.
"""


class HolonomicaError(Exception):
    pass


class ParseError(HolonomicaError, ValueError):
    pass


class PreconditionError(HolonomicaError, ValueError):
    pass


class RingTagError(PreconditionError):
    """Quadratic-ring elements with different modes were combined."""


class NotInvertible(PreconditionError):
    pass


class NotDivisible(PreconditionError):
    def __init__(self, remainder, message=None):
        self.remainder = remainder
        super().__init__(message or f"not divisible, remainder {remainder}")


class Undetermined(PreconditionError):
    """Leading recurrence coefficient vanishes and the next term was not supplied."""

    def __init__(self, index):
        self.index = index
        super().__init__(f"a[{index}] is not determined by the recurrence; supply it")


class Inconsistent(PreconditionError):
    def __init__(self, n, index=None):
        self.n = n
        self.index = index
        super().__init__(f"recurrence relation at n={n} fails on the given terms")


class NotASolution(PreconditionError):
    pass


class TruncationTooShort(PreconditionError):
    pass


class DegreeCapExceeded(PreconditionError):
    pass


class InternalConsistencyError(HolonomicaError, AssertionError):
    """A constructed witness failed its own verification; this is a bug."""
