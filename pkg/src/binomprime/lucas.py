"""Binomial coefficients modulo a prime via Lucas' theorem.

``C(R, S) mod p`` is the product of ``C(r_i, s_i) mod p`` over the base-p
digits of ``R`` and ``S``, with ``C(r, s) = 0`` whenever ``s > r``.
"""

from dataclasses import dataclass
from functools import lru_cache

from .arith import DigitsBaseP, digits_base_p
from .errors import NotPrime

#: primes at or below this are checked by trial division; larger ones are trusted
VALIDATE_LIMIT = 10**6
#: below this size a full table of digit binomials mod p is cached
_TABLE_LIMIT = 256


@dataclass(frozen=True)
class LucasFactorization:
    """Digit-by-digit evaluation of ``C(r, s) mod p``.

    ``factors[i]`` is ``C(r_i, s_i) mod p`` for ``i`` up to the longer of the
    two expansions (missing digits count as 0).
    """

    p: int
    r_digits: DigitsBaseP
    s_digits: DigitsBaseP
    factors: tuple
    residue: int


@lru_cache(maxsize=4096)
def _is_small_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _validate(p, validate):
    if p < 2:
        raise NotPrime(f"{p} is not prime")
    if validate and p <= VALIDATE_LIMIT and not _is_small_prime(p):
        raise NotPrime(f"{p} is not prime")


def _digit_binom(a, b, p, work=None):
    # a, b < p so every denominator factor is invertible mod p
    if b > a:
        return 0
    k = min(b, a - b)
    if work is not None:
        work.charge(k)
    num = den = 1
    for i in range(1, k + 1):
        num = num * (a - k + i) % p
        den = den * i % p
    return num * pow(den, -1, p) % p


@lru_cache(maxsize=64)
def _digit_table(p):
    rows = []
    for a in range(p):
        row = [1] * (a + 1)
        for b in range(a):
            row[b + 1] = row[b] * (a - b) % p * pow(b + 1, -1, p) % p
        rows.append(tuple(row))
    return tuple(rows)


def lucas_binom_mod(r, s, p, validate=True, work=None):
    """Full Lucas evaluation of ``C(r, s) mod p`` with its digit factors."""
    if r < 0 or s < 0:
        raise ValueError("r and s must be non-negative")
    _validate(p, validate)
    rd = digits_base_p(r, p)
    sd = digits_base_p(s, p)
    r_digits, s_digits = rd.digits, sd.digits
    width = max(len(r_digits), len(s_digits))
    if len(r_digits) < width:
        r_digits = r_digits + (0,) * (width - len(r_digits))
    elif len(s_digits) < width:
        s_digits = s_digits + (0,) * (width - len(s_digits))
    if p <= _TABLE_LIMIT:
        table = _digit_table(p)
        factors = tuple(table[ri][si] if si <= ri else 0 for ri, si in zip(r_digits, s_digits))
    else:
        factors = tuple(_digit_binom(ri, si, p, work) for ri, si in zip(r_digits, s_digits))
    residue = 1
    for f in factors:
        residue = residue * f % p
    return LucasFactorization(p, rd, sd, factors, residue % p)


def lucas_residue(r, s, p, validate=True):
    """Residue-only form of :func:`lucas_binom_mod`, for hot loops."""
    if r < 0 or s < 0:
        raise ValueError("r and s must be non-negative")
    _validate(p, validate)
    if s > r:
        return 0
    table = _digit_table(p) if p <= _TABLE_LIMIT else None
    acc = 1
    while s:
        r, ri = divmod(r, p)
        s, si = divmod(s, p)
        if si > ri:
            return 0
        if si:
            acc = acc * (table[ri][si] if table else _digit_binom(ri, si, p)) % p
    return acc % p


def divides_prime_power(n, p, j, validate=True):
    """True iff ``p**j`` divides ``n``, decided through ``C(n-1, p**j - 1) mod p``.

    ``p**j - 1`` is ``j`` base-p digits equal to ``p-1``, and ``C(r_i, p-1)`` is
    1 when ``r_i == p-1`` and 0 otherwise, so the Lucas product collapses to a
    check of the ``j`` lowest digits of ``n-1``.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if j < 1:
        raise ValueError(f"j must be positive, got {j}")
    _validate(p, validate)
    m = n - 1
    top = p - 1
    for _ in range(j):
        m, d = divmod(m, p)
        if d != top:
            return False
    return True
