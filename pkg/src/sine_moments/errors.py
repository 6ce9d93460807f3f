"""Exception hierarchy shared by all sine_moments modules."""


class SineMomentsError(Exception):
    """Base class for all errors raised by this package."""


class PoleError(SineMomentsError):
    """Evaluation requested at (or too close to) a pole."""


class SieveTooSmall(SineMomentsError):
    """A divisor table does not cover the requested range."""


class TooLarge(SineMomentsError):
    """Request exceeds a hard cost guard (e.g. O(T^2) double sums)."""


class MemoryBudgetError(SineMomentsError):
    """Allocation would exceed the configured memory budget."""


class ConvergenceError(SineMomentsError):
    """A truncated series/product failed its tail-bound target."""


class CoalescenceError(SineMomentsError):
    """Shift parameters are too close for a pole-bearing formula."""


class FormatError(SineMomentsError):
    """A cache file has the wrong magic, version, or checksum."""


class TruncationError(SineMomentsError):
    """A cache file ended before the declared payload."""


class BudgetExceeded(SineMomentsError):
    """A quadrature run would exceed its node budget."""
