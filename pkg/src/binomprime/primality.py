"""The five binomial-coefficient primality tests.

Each test is a sum of residues that vanishes exactly when ``n`` is prime:

========================  ===============================  =====================
kind                      term                             index set
========================  ===============================  =====================
``T21``                   ``C(n-1, p-1) mod p``            primes ``p*p <= n``
``T22``                   ``C(n+p-1, n-1) mod n``          primes ``p*p <= n``
``CLASSIC_PRIMES``        ``C(n, p) mod n``                primes ``p*p <= n``
``CLASSIC_FULL``          ``C(n, k) mod n``                ``1 <= k <= n-1``
``PASCAL``                ``C(n+i, i+1) mod n``            ``0 <= i <= n//2 - 1``
========================  ===============================  =====================

``REFERENCE`` mode computes every term through the exact binomial.
``REDUCED`` mode (prime-indexed kinds only) uses the closed forms that fall
out of the congruence ``C(n-1, p-1) = [p | n] (mod p)``:

* ``T21``: the term is 1 when ``p | n`` and 0 otherwise.
* ``T22`` and ``CLASSIC_PRIMES``: the term is ``n // p`` when ``p | n`` and 0
  otherwise.  For ``T22`` this is because ``C(n+p-1, p) = C(n+p-1, p-1) * n/p``
  and the cofactor is ``1 (mod p)``; ``CLASSIC_PRIMES`` follows the same way
  from ``C(n, p) = (n/p) * C(n-1, p-1)``.

The test suite checks both closed forms against the exact values.
"""

import enum
from dataclasses import dataclass, field

from .arith import Work, binomial_mod_exact
from .errors import UnsupportedMode, WorkBudgetExceeded
from .primes import primes_up_to_sqrt


class TestKind(enum.Enum):
    __test__ = False

    T21 = "t21"
    T22 = "t22"
    CLASSIC_FULL = "classic-full"
    CLASSIC_PRIMES = "classic-primes"
    PASCAL = "pascal"

    @property
    def prime_indexed(self):
        return self in _PRIME_INDEXED

    @property
    def supports_reduced(self):
        return self in _PRIME_INDEXED


_PRIME_INDEXED = frozenset({TestKind.T21, TestKind.T22, TestKind.CLASSIC_PRIMES})


class EvalMode(enum.Enum):
    REFERENCE = "reference"
    REDUCED = "reduced"


class Verdict(enum.Enum):
    PRIME = "PRIME"
    COMPOSITE = "COMPOSITE"


def default_mode(kind):
    return EvalMode.REDUCED if kind.supports_reduced else EvalMode.REFERENCE


@dataclass(slots=True)
class TermRecord:
    index: int
    prime_or_k: int
    modulus: int
    residue: int
    mode: EvalMode


@dataclass(slots=True)
class WorkCounts:
    terms: int = 0
    mults: int = 0


@dataclass
class TestReport:
    """Outcome of one ``(n, kind, mode)`` run.

    ``verdict`` is ``None`` only on the partial report carried by a
    :class:`WorkBudgetExceeded`.  ``note`` explains verdicts that were fixed
    by convention rather than by evaluating a sum (``n < 4``).
    """

    __test__ = False

    n: int
    kind: TestKind
    mode: EvalMode
    terms: list = field(default_factory=list)
    sum: int = 0
    verdict: Verdict = None
    witnesses: tuple = ()
    short_circuited: bool = False
    work: WorkCounts = field(default_factory=WorkCounts)
    note: str = None

    @property
    def is_prime(self):
        return self.verdict is Verdict.PRIME

    @property
    def residues(self):
        return [t.residue for t in self.terms]

    def to_json_dict(self):
        """JSON-ready dict; every number is a decimal string."""
        out = {
            "n": str(self.n),
            "kind": self.kind.value,
            "mode": self.mode.value,
            "verdict": self.verdict.value if self.verdict else None,
            "sum": str(self.sum),
            "short_circuited": self.short_circuited,
            "terms": [
                {
                    "index": str(t.index),
                    "prime_or_k": str(t.prime_or_k),
                    "modulus": str(t.modulus),
                    "residue": str(t.residue),
                }
                for t in self.terms
            ],
            "witnesses": [str(w) for w in self.witnesses],
            "work": {"terms": str(self.work.terms), "mults": str(self.work.mults)},
        }
        if self.note is not None:
            out["note"] = self.note
        return out

    @classmethod
    def from_json_dict(cls, d):
        mode = EvalMode(d["mode"])
        return cls(
            n=int(d["n"]),
            kind=TestKind(d["kind"]),
            mode=mode,
            terms=[
                TermRecord(int(t["index"]), int(t["prime_or_k"]), int(t["modulus"]),
                           int(t["residue"]), mode)
                for t in d["terms"]
            ],
            sum=int(d["sum"]),
            verdict=Verdict(d["verdict"]) if d["verdict"] else None,
            witnesses=tuple(int(w) for w in d["witnesses"]),
            short_circuited=bool(d["short_circuited"]),
            work=WorkCounts(int(d["work"]["terms"]), int(d["work"]["mults"])),
            note=d.get("note"),
        )


def _check_prime_term_args(n, p):
    if n <= 3:
        raise ValueError(f"n must exceed 3, got {n}")
    if p < 2 or p * p > n:
        raise ValueError(f"need 2 <= p and p*p <= n, got p={p}, n={n}")


def _work(work):
    return Work() if work is None else work


def term_t21(n, p, mode=EvalMode.REFERENCE, work=None):
    """``C(n-1, p-1) mod p``."""
    _check_prime_term_args(n, p)
    work = _work(work)
    if mode is EvalMode.REDUCED:
        work.charge(1)
        return 1 if n % p == 0 else 0
    return binomial_mod_exact(n - 1, p - 1, p, work)


def term_t22(n, p, mode=EvalMode.REFERENCE, work=None):
    """``C(n+p-1, n-1) mod n``, evaluated as ``C(n+p-1, p)`` (p factors)."""
    _check_prime_term_args(n, p)
    work = _work(work)
    if mode is EvalMode.REDUCED:
        work.charge(1)
        return n // p if n % p == 0 else 0
    return binomial_mod_exact(n + p - 1, p, n, work)


def term_classic_primes(n, p, mode=EvalMode.REFERENCE, work=None):
    """``C(n, p) mod n``."""
    _check_prime_term_args(n, p)
    work = _work(work)
    if mode is EvalMode.REDUCED:
        work.charge(1)
        return n // p if n % p == 0 else 0
    return binomial_mod_exact(n, p, n, work)


def term_classic_full(n, k, work=None):
    """``C(n, k) mod n`` for ``1 <= k <= n-1``."""
    if n < 2 or not 1 <= k <= n - 1:
        raise ValueError(f"need n >= 2 and 1 <= k <= n-1, got n={n}, k={k}")
    return binomial_mod_exact(n, k, n, _work(work))


def pascal_last_index(n):
    """``floor(n/2 - 1)``, the upper summation index of the Pascal test."""
    return n // 2 - 1


def term_pascal(n, i, work=None):
    """``C(n+i, i+1) mod n`` for ``0 <= i <= floor(n/2 - 1)``."""
    if n < 2 or not 0 <= i <= pascal_last_index(n):
        raise ValueError(f"need n > 1 and 0 <= i <= n//2 - 1, got n={n}, i={i}")
    return binomial_mod_exact(n + i, i + 1, n, _work(work))


_PRIME_TERMS = {
    TestKind.T21: term_t21,
    TestKind.T22: term_t22,
    TestKind.CLASSIC_PRIMES: term_classic_primes,
}


def term_count(n, kind):
    """Number of summands ``run_test`` evaluates for ``n > 3`` (no short circuit)."""
    if kind.prime_indexed:
        return len(primes_up_to_sqrt(n))
    if kind is TestKind.CLASSIC_FULL:
        return n - 1
    return pascal_last_index(n) + 1


def _classic_full_terms(n, work):
    # walk the row C(n, k) = C(n, k-1) * (n-k+1) / k, one step per term
    c = 1
    for k in range(1, n):
        work.charge(1)
        c = c * (n - k + 1) // k
        yield k, c % n


def _pascal_terms(n, work):
    # C(n+i+1, i+2) = C(n+i, i+1) * (n+i+1) / (i+2)
    c = n
    for i in range(pascal_last_index(n) + 1):
        work.charge(1)
        if i:
            c = c * (n + i) // (i + 1)
        yield i, c % n


def _iter_terms(n, kind, mode, work):
    """Yield ``(index, prime_or_k, modulus, residue)`` in increasing index order."""
    if kind.prime_indexed:
        fn = _PRIME_TERMS[kind]
        for i, p in enumerate(primes_up_to_sqrt(n), start=1):
            modulus = p if kind is TestKind.T21 else n
            yield i, p, modulus, fn(n, p, mode, work)
        return
    source = _classic_full_terms if kind is TestKind.CLASSIC_FULL else _pascal_terms
    for idx, (k, residue) in enumerate(source(n, work), start=1):
        yield idx, k, n, residue


def run_test(n, kind, mode=None, short_circuit=False, budget=None):
    """Evaluate one test on ``n`` and return its :class:`TestReport`.

    ``mode`` defaults to ``REDUCED`` where available.  On a budget overrun the
    raised :class:`WorkBudgetExceeded` carries the partial report in
    ``.report``.
    """
    kind = TestKind(kind)
    mode = default_mode(kind) if mode is None else EvalMode(mode)
    if mode is EvalMode.REDUCED and not kind.supports_reduced:
        raise UnsupportedMode(f"{kind.value} has no reduced evaluator")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")

    report = TestReport(n, kind, mode)
    if n < 2:
        report.verdict = Verdict.COMPOSITE
        report.note = "n < 2 is not prime; reported composite by convention"
        return report
    if n < 4 and kind.prime_indexed:
        report.verdict = Verdict.PRIME
        report.note = "n in {2, 3} is prime; no primes p with p*p <= n"
        return report

    work = Work(budget)
    total = 0
    witnesses = []
    try:
        for index, key, modulus, residue in _iter_terms(n, kind, mode, work):
            report.terms.append(TermRecord(index, key, modulus, residue, mode))
            work.terms += 1
            if residue:
                total += residue
                if kind.prime_indexed:
                    witnesses.append(key)
                if short_circuit:
                    report.short_circuited = True
                    break
    except WorkBudgetExceeded as exc:
        report.sum = total
        report.witnesses = tuple(witnesses)
        report.work = WorkCounts(work.terms, work.mults)
        report.note = "incomplete: work budget exceeded"
        exc.report = report
        raise
    report.sum = total
    report.witnesses = tuple(witnesses)
    report.work = WorkCounts(work.terms, work.mults)
    report.verdict = Verdict.PRIME if total == 0 else Verdict.COMPOSITE
    return report


def small_prime_factors(n):
    """Prime divisors ``p`` of ``n`` with ``p*p <= n``; empty iff ``n`` is prime."""
    if n <= 3:
        raise ValueError(f"n must exceed 3, got {n}")
    return set(run_test(n, TestKind.T22, EvalMode.REDUCED).witnesses)
