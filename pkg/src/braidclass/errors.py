"""Exception hierarchy shared by every module of the package."""


class BraidError(Exception):
    """Base class for all errors raised by braidclass."""


class InvalidStrandCount(BraidError, ValueError):
    pass


class InvalidLetter(BraidError, ValueError):
    pass


class StrandMismatch(BraidError, ValueError):
    """Two operands live in braid groups with different strand counts."""


class NotSimple(BraidError, ValueError):
    """A positive word does not represent a permutation braid (two strands cross twice)."""


class NegativeLetter(BraidError, ValueError):
    pass


class EmptyFactorSequence(BraidError, ValueError):
    """head/tail requested on a pure power of the half twist."""


class NoFactors(BraidError, ValueError):
    """Cycling or decycling requested on a pure power of the half twist."""


class NotRigid(BraidError, ValueError):
    pass


class InvariantViolation(BraidError, AssertionError):
    """A WeightedForm failed its structural checks (only raised when checking is on)."""


class BoundExceeded(BraidError, RuntimeError):
    """A theoretical search bound was exhausted; indicates a bug rather than a braid property."""


class OrbitInvalid(BraidError, ValueError):
    pass


class BudgetExceeded(BraidError, RuntimeError):
    """An oracle enumeration would exceed its configured budget."""


class ParseError(BraidError, ValueError):
    pass
