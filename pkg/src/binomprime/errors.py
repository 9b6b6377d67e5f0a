"""Exception hierarchy shared by every module."""


class BinomPrimeError(Exception):
    """Base class for all errors raised by this package."""


class WorkBudgetExceeded(BinomPrimeError):
    """An exact evaluation would exceed the multiplication budget.

    ``report`` is filled in by :func:`binomprime.primality.run_test` with the
    partial report accumulated before the overrun.
    """

    def __init__(self, budget, needed, report=None):
        super().__init__(f"work budget of {budget} multiplications exceeded (needed {needed})")
        self.budget = budget
        self.needed = needed
        self.report = report


class ZeroModulus(BinomPrimeError, ZeroDivisionError):
    pass


class BadBase(BinomPrimeError, ValueError):
    pass


class LimitTooLarge(BinomPrimeError, ValueError):
    pass


class OutOfRange(BinomPrimeError, ValueError):
    pass


class NotPrime(BinomPrimeError, ValueError):
    pass


class UnsupportedMode(BinomPrimeError, ValueError):
    pass
