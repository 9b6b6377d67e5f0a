"""Ground-truth implementations used to check everything else.

Nothing here calls into the modules it is meant to validate: trial division
does its own square bound, and binomials come from Pascal's rule rather than
the multiplicative formula.
"""

from dataclasses import dataclass

from .arith import default_budget
from .errors import WorkBudgetExceeded, ZeroModulus


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple  # ((prime, exponent), ...) ascending

    def value(self):
        acc = 1
        for p, e in self.factors:
            acc *= p**e
        return acc

    def primes(self):
        return [p for p, _ in self.factors]


def is_prime_trial(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize_trial(n, budget=None):
    """Complete factorization of ``n >= 1`` by ascending trial division."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if budget is None:
        budget = default_budget()
    factors = []
    rest = n
    d = 2
    steps = 0
    while d * d <= rest:
        steps += 1
        if steps > budget:
            raise WorkBudgetExceeded(budget, steps)
        if rest % d == 0:
            e = 0
            while rest % d == 0:
                rest //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if rest > 1:
        factors.append((rest, 1))
    return Factorization(n, tuple(factors))


def binomial_pascal(r, s, m=None, budget=None):
    """``C(r, s)`` (optionally mod ``m``) by building Pascal's triangle row by row.

    Only the first ``s+1`` columns are kept, so the cost is about ``r*s``
    additions.
    """
    if r < 0 or s < 0:
        raise ValueError("r and s must be non-negative")
    if m is not None and m <= 0:
        raise ZeroModulus(f"modulus must be positive, got {m}")
    if s > r:
        return 0
    if budget is None:
        budget = default_budget()
    needed = r * s
    if needed > budget:
        raise WorkBudgetExceeded(budget, needed)
    row = [1] + [0] * s
    for _ in range(r):
        for k in range(s, 0, -1):
            v = row[k] + row[k - 1]
            row[k] = v % m if m is not None else v
    return row[s] % m if m is not None else row[s]
