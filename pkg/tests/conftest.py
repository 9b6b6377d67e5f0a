import pytest

from binomprime.oracle import factorize_trial, is_prime_trial


@pytest.fixture(scope="session")
def trial_primes():
    """Trial-division primality flags for 0..100000."""
    return [is_prime_trial(n) for n in range(100001)]


@pytest.fixture(scope="session")
def small_divisors():
    """``{p prime : p | n, p*p <= n}`` for 0..100000, via trial factorization."""
    out = [set(), set()]
    for n in range(2, 100001):
        out.append({p for p, _ in factorize_trial(n).factors if p * p <= n})
    return out


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
