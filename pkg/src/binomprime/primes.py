"""Sieve of Eratosthenes and the prime-counting function."""

import threading
from bisect import bisect_right
from dataclasses import dataclass

from .arith import isqrt
from .errors import LimitTooLarge, OutOfRange

MAX_SIEVE_LIMIT = 2**32


@dataclass(frozen=True)
class PrimeTable:
    """All primes ``<= limit``; ``primes[i]`` is the (i+1)-th prime."""

    limit: int
    primes: tuple

    def __len__(self):
        return len(self.primes)

    def __iter__(self):
        return iter(self.primes)

    def up_to(self, x):
        """Primes ``<= x`` as a tuple (``x`` may not exceed ``limit``)."""
        return self.primes[: pi(self, x)]


def sieve(limit):
    if limit < 0:
        raise ValueError(f"limit must be non-negative, got {limit}")
    if limit > MAX_SIEVE_LIMIT:
        raise LimitTooLarge(f"sieve limit {limit} exceeds {MAX_SIEVE_LIMIT}")
    if limit < 2:
        return PrimeTable(limit, ())
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for i in range(2, isqrt(limit) + 1):
        if flags[i]:
            start = i * i
            flags[start::i] = bytes(len(range(start, limit + 1, i)))
    return PrimeTable(limit, tuple(i for i, f in enumerate(flags) if f))


def pi(table, x):
    """Number of primes ``<= x``."""
    if x > table.limit:
        raise OutOfRange(f"x={x} is beyond the table limit {table.limit}")
    return bisect_right(table.primes, x)


_cache_lock = threading.Lock()
_cached = sieve(1 << 12)


def _table_covering(limit):
    global _cached
    table = _cached
    if limit <= table.limit:
        return table
    with _cache_lock:
        if limit > _cached.limit:
            # grow geometrically so sweeps over increasing n re-sieve rarely
            _cached = sieve(min(MAX_SIEVE_LIMIT, max(limit, 2 * _cached.limit)))
        return _cached


def primes_up_to_sqrt(n):
    """Primes ``p`` with ``p*p <= n`` in increasing order.

    This is the index set ``p_1 .. p_pi(sqrt n)`` of the prime-indexed tests.
    Squares of primes are included on purpose: ``n = p*p`` is only caught
    through ``p`` itself.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    root = isqrt(n)
    return list(_table_covering(root).up_to(root))
