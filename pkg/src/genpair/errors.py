"""Exception types shared across the toolkit."""


class GenpairError(Exception):
    """Base class for all errors raised by this package."""


class InvalidPermutationError(GenpairError):
    """The image sequence is not a bijection of {0, ..., n-1}."""


class DegreeMismatchError(GenpairError):
    """Operands act on different numbers of points."""


class CycleFormatError(GenpairError):
    """A cycle-notation string could not be parsed."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column


class CapExceededError(GenpairError):
    """An exact computation was refused because a configured cap is exceeded."""


class NotASubgroupError(GenpairError):
    """A claimed subgroup has a generator outside the ambient group."""


class NotNormalError(GenpairError):
    """A claimed normal subgroup is not normal; carries a violating conjugate."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotTransitiveError(GenpairError):
    """A transitive group was required; carries the orbit partition found."""

    def __init__(self, message, orbits=None):
        super().__init__(message)
        self.orbits = orbits


class BudgetExhaustedError(GenpairError):
    """A randomized search ran out of trials; names the branch that stalled."""

    def __init__(self, message, branch=None, trials=None):
        super().__init__(message)
        self.branch = branch
        self.trials = trials


class ConstructionError(GenpairError):
    """An internal construction failed its own verification (a bug, never silent)."""
