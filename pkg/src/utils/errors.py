"""Exception hierarchy shared by all modules."""


class RobustMatchingError(Exception):
    """Base class for errors raised by this package."""


class InputError(RobustMatchingError, ValueError):
    """Malformed input or a violated precondition (CLI exit status 2)."""


class ResourceLimitError(RobustMatchingError, RuntimeError):
    """Instance too large for the brute-force path and no polynomial path exists."""


class GuaranteeViolation(RobustMatchingError, AssertionError):
    """A mathematical postcondition that must always hold was found violated.

    Raised by hard-asserted checks (complementary slackness, merge bullets,
    lexicographic maximality). Seeing one means the implementation is wrong.
    """
