"""Range sweeps checking the tests against trial division.

Each check walks ``n`` upward and stops at the first failure, so the
counterexample it reports is the smallest one in range.
"""

from dataclasses import dataclass

from .errors import WorkBudgetExceeded
from .oracle import factorize_trial, is_prime_trial
from .primality import _PRIME_TERMS, EvalMode, TestKind, run_test
from .primes import primes_up_to_sqrt

#: exact evaluation of the prime-indexed tests is swept up to here
REFERENCE_PRIME_CAP = 10**4
#: classic-full and pascal evaluate O(n) big binomials per n
REFERENCE_FULL_CAP = 3000

_TERM_MODES = (EvalMode.REFERENCE, EvalMode.REDUCED)


@dataclass
class CheckResult:
    name: str
    lo: int
    hi: int
    counterexample: int = None
    detail: str = ""

    @property
    def passed(self):
        return self.counterexample is None

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name} n in [{self.lo}, {self.hi}]"
        if not self.passed:
            text += f": counterexample n={self.counterexample} ({self.detail})"
        return text


def check_verdicts(kind, mode, lo, hi, budget=None):
    result = CheckResult(f"verdict {kind.value}/{mode.value}", lo, hi)
    for n in range(lo, hi + 1):
        try:
            got = run_test(n, kind, mode, budget=budget).is_prime
        except WorkBudgetExceeded as exc:
            result.counterexample, result.detail = n, str(exc)
            break
        if got != is_prime_trial(n):
            result.counterexample = n
            result.detail = f"test says {'prime' if got else 'composite'}, trial division disagrees"
            break
    return result


def check_witnesses(kind, lo, hi):
    result = CheckResult(f"witnesses {kind.value}/reduced", lo, hi)
    for n in range(lo, hi + 1):
        got = set(run_test(n, kind, EvalMode.REDUCED).witnesses)
        want = {p for p in factorize_trial(n).primes() if p * p <= n}
        if got != want:
            result.counterexample = n
            result.detail = f"got {sorted(got)}, expected {sorted(want)}"
            break
    return result


def check_mode_equivalence(kind, lo, hi):
    fn = _PRIME_TERMS[kind]
    result = CheckResult(f"mode equivalence {kind.value}", lo, hi)
    for n in range(lo, hi + 1):
        for p in primes_up_to_sqrt(n):
            ref, red = (fn(n, p, m) for m in _TERM_MODES)
            if ref != red:
                result.counterexample = n
                result.detail = f"p={p}: reference {ref}, reduced {red}"
                return result
    return result


def run_selftest(limit, kinds=None, budget=None):
    """Run every applicable check up to ``limit`` and return the results."""
    if limit < 4:
        raise ValueError(f"limit must be at least 4, got {limit}")
    kinds = list(TestKind) if kinds is None else list(kinds)
    results = []
    for kind in kinds:
        if kind.prime_indexed:
            results.append(check_verdicts(kind, EvalMode.REDUCED, 2, limit, budget))
            results.append(check_witnesses(kind, 4, limit))
            ref_hi = min(limit, REFERENCE_PRIME_CAP)
            results.append(check_verdicts(kind, EvalMode.REFERENCE, 2, ref_hi, budget))
            results.append(check_mode_equivalence(kind, 4, ref_hi))
        else:
            results.append(check_verdicts(kind, EvalMode.REFERENCE, 2, min(limit, REFERENCE_FULL_CAP), budget))
    return results
