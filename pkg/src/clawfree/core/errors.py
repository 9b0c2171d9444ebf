"""
Exception hierarchy for clawfree
"""


class ClawfreeError(Exception):
    """Base class for all clawfree errors"""


class InputError(ClawfreeError, ValueError):
    """An argument violates the precondition of an operation"""


class CapacityError(ClawfreeError):
    """A ground set, rank or enumeration range exceeds the supported capacity"""


class BudgetExceeded(ClawfreeError):
    """A campaign ran past its time budget"""
