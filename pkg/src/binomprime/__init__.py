"""Deterministic primality tests built on divisibility of binomial coefficients."""

from .errors import (
    BadBase,
    BinomPrimeError,
    LimitTooLarge,
    NotPrime,
    OutOfRange,
    UnsupportedMode,
    WorkBudgetExceeded,
    ZeroModulus,
)
from .arith import Work, binomial_exact, binomial_mod_exact, digits_base_p, isqrt
from .primes import PrimeTable, pi, primes_up_to_sqrt, sieve
from .lucas import LucasFactorization, divides_prime_power, lucas_binom_mod, lucas_residue
from .primality import (
    EvalMode,
    TermRecord,
    TestKind,
    TestReport,
    Verdict,
    run_test,
    small_prime_factors,
    term_classic_full,
    term_classic_primes,
    term_pascal,
    term_t21,
    term_t22,
)

__version__ = "0.1.0"
