"""Exception types shared across the package."""


class SepsysError(Exception):
    """Base class for all structured errors raised by this package."""


class BadInvolution(SepsysError):
    """The given pairing is not an involution on the element list."""


class AntisymmetryViolation(SepsysError):
    """Two distinct elements compare in both directions."""

    def __init__(self, a, b):
        super().__init__(f"antisymmetry violated: {a!r} <= {b!r} and {b!r} <= {a!r}")
        self.pair = (a, b)


class UnknownElement(SepsysError):
    """An element reference does not belong to the structure."""


class NotALattice(SepsysError):
    """A pair of elements has no unique least upper / greatest lower bound."""

    def __init__(self, a, b, bound):
        super().__init__(f"no unique {bound} for {a!r} and {b!r}")
        self.pair = (a, b)
        self.bound = bound  # "join" or "meet"


class NotClosed(SepsysError):
    """A concrete family was asked to act as a universe but is not join/meet closed."""


class NotATree(SepsysError):
    """The given graph is not a tree."""


class UnknownExample(SepsysError):
    """No built-in example of that name."""


class BudgetExceeded(SepsysError):
    """The requested exact computation is too large for this toolkit."""


class SearchBudgetExceeded(BudgetExceeded):
    """The brute-force search space is too large."""


class InvalidInput(SepsysError):
    """A file or mapping does not conform to the input schema."""


class InternalAssertionFailed(SepsysError):
    """A constructed object failed its own verification; this is a bug."""
