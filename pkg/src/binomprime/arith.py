"""Exact integer helpers: integer square root, binomials, base-p digits.

Python ints are already arbitrary precision, so "Nat" throughout the package
is just a non-negative ``int``.  What this module adds is a multiplication
budget (:class:`Work`) so that the exact evaluators fail loudly instead of
grinding on inputs that cannot finish.
"""

import os
from dataclasses import dataclass

from .errors import BadBase, WorkBudgetExceeded, ZeroModulus

DEFAULT_WORK_BUDGET = 10**7
BUDGET_ENV_VAR = "BINOM_WORK_BUDGET"


def default_budget():
    """Multiplication budget, taken from ``$BINOM_WORK_BUDGET`` when set."""
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None or not raw.strip():
        return DEFAULT_WORK_BUDGET
    value = int(raw.strip(), 0)
    if value < 0:
        raise ValueError(f"{BUDGET_ENV_VAR} must be non-negative, got {raw!r}")
    return value


class Work:
    """Counts multiplication steps and terms against a budget.

    One "multiplication" is one step of the multiplicative binomial formula
    (a multiply followed by an exact divide) or one modular reduction in a
    reduced evaluator.  The budget is checked *before* the work is done, so an
    infeasible binomial is rejected without being attempted.
    """

    def __init__(self, budget=None):
        self.budget = default_budget() if budget is None else budget
        self.mults = 0
        self.terms = 0

    def charge(self, mults):
        needed = self.mults + mults
        if needed > self.budget:
            raise WorkBudgetExceeded(self.budget, needed)
        self.mults = needed

    def __repr__(self):
        return f"Work(mults={self.mults}, terms={self.terms}, budget={self.budget})"


def _check_nat(name, value):
    if value < 0:
        raise ValueError(f"{name} must be a non-negative integer, got {value}")


def isqrt(n):
    """Largest ``k`` with ``k*k <= n``, by integer Newton iteration."""
    _check_nat("n", n)
    if n < 2:
        return n
    # start above the root so the iteration decreases monotonically
    x = 1 << ((n.bit_length() + 1) // 2)
    while True:
        y = (x + n // x) >> 1
        if y >= x:
            break
        x = y
    while x * x > n:
        x -= 1
    while (x + 1) * (x + 1) <= n:
        x += 1
    return x


def binomial_exact(r, s, work=None):
    """Exact ``C(r, s)``; zero when ``s > r``.

    Uses the multiplicative formula ``prod (r-k+i)/i`` over ``k = min(s, r-s)``
    steps; every intermediate division is exact because the running value is
    itself a binomial coefficient.
    """
    _check_nat("r", r)
    _check_nat("s", s)
    if s > r:
        return 0
    k = min(s, r - s)
    if work is None:
        work = Work()
    work.charge(k)
    base = r - k
    acc = 1
    for i in range(1, k + 1):
        acc = acc * (base + i) // i
    return acc


def binomial_mod_exact(r, s, m, work=None):
    """``C(r, s) mod m`` through the exact big-integer value."""
    if m == 0:
        raise ZeroModulus("modulus must be at least 1")
    if m < 0:
        raise ValueError(f"modulus must be positive, got {m}")
    return binomial_exact(r, s, work) % m


@dataclass(frozen=True)
class DigitsBaseP:
    """Little-endian digits of a number in base ``base``.

    ``digits`` is ``(0,)`` for zero, otherwise its last entry is nonzero.
    """

    base: int
    digits: tuple

    def value(self):
        acc = 0
        for d in reversed(self.digits):
            acc = acc * self.base + d
        return acc

    def __len__(self):
        return len(self.digits)

    def __getitem__(self, i):
        return self.digits[i]


def digits_base_p(n, p):
    _check_nat("n", n)
    if p < 2:
        raise BadBase(f"base must be at least 2, got {p}")
    if n == 0:
        return DigitsBaseP(p, (0,))
    out = []
    while n:
        n, d = divmod(n, p)
        out.append(d)
    return DigitsBaseP(p, tuple(out))
