import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from binomprime.errors import UnsupportedMode, WorkBudgetExceeded
from binomprime.oracle import binomial_pascal, factorize_trial, is_prime_trial
from binomprime.primality import (
    EvalMode,
    TestKind,
    TestReport,
    Verdict,
    run_test,
    small_prime_factors,
    term_classic_full,
    term_classic_primes,
    term_count,
    term_pascal,
    term_t21,
    term_t22,
)
from binomprime.primes import primes_up_to_sqrt

REF, RED = EvalMode.REFERENCE, EvalMode.REDUCED
PRIME_KINDS = (TestKind.T21, TestKind.T22, TestKind.CLASSIC_PRIMES)


@pytest.mark.parametrize("fn, n, p, mode, expected", [
    (term_t21, 10, 2, RED, 1),
    (term_t21, 11, 3, REF, 0),
    (term_t21, 25, 5, REF, 1),
    (term_t22, 10, 2, REF, 5),
    (term_t22, 10, 3, REF, 0),
    (term_t22, 4, 2, REF, 2),
    (term_classic_primes, 10, 2, REF, 5),
    (term_classic_primes, 11, 3, REF, 0),
    (term_classic_primes, 9, 3, REF, 3),
])
def test_term_examples(fn, n, p, mode, expected):
    assert fn(n, p, mode) == expected
    other = RED if mode is REF else REF
    assert fn(n, p, other) == expected


def test_term_values_against_pascal_oracle():
    # C(24,4)=10626, C(11,9)=55, C(12,9)=220, C(9,3)=84
    assert binomial_pascal(24, 4, 5) == 1
    assert binomial_pascal(11, 9, 10) == 5
    assert binomial_pascal(12, 9, 10) == 0
    assert binomial_pascal(9, 3, 9) == 3


def test_classic_full_and_pascal_examples():
    assert term_classic_full(5, 2) == 0
    assert term_classic_full(4, 2) == 2
    assert term_pascal(7, 1) == 0
    assert term_pascal(6, 1) == 3
    for n in range(2, 60):
        assert term_classic_full(n, 1) == 0
        assert term_pascal(n, 0) == 0


def test_term_preconditions():
    with pytest.raises(ValueError):
        term_t21(3, 2)
    with pytest.raises(ValueError):
        term_t22(10, 5)  # 5*5 > 10
    with pytest.raises(ValueError):
        term_classic_full(5, 5)
    with pytest.raises(ValueError):
        term_pascal(7, 3)  # last index is floor(7/2 - 1) = 2


def test_run_test_examples():
    r = run_test(11, TestKind.T22, REF)
    assert r.residues == [0, 0] and r.sum == 0 and r.verdict is Verdict.PRIME

    r = run_test(10, TestKind.T22, REF)
    assert r.residues == [5, 0] and r.sum == 5
    assert r.verdict is Verdict.COMPOSITE and r.witnesses == (2,)

    r = run_test(100, TestKind.T22, RED)
    assert r.residues == [50, 0, 20, 0] and r.sum == 70 and set(r.witnesses) == {2, 5}
    assert r.residues == run_test(100, TestKind.T22, REF).residues

    r = run_test(25, TestKind.T21, REF)
    assert r.residues == [0, 0, 1] and r.verdict is Verdict.COMPOSITE and r.witnesses == (5,)


def test_term_records_fields():
    r = run_test(10, TestKind.T21, REF)
    assert [(t.index, t.prime_or_k, t.modulus, t.mode) for t in r.terms] == [(1, 2, 2, REF), (2, 3, 3, REF)]
    r = run_test(6, TestKind.PASCAL)
    assert [(t.index, t.prime_or_k, t.modulus) for t in r.terms] == [(1, 0, 6), (2, 1, 6), (3, 2, 6)]
    assert r.residues == [term_pascal(6, i) for i in range(3)]
    r = run_test(8, TestKind.CLASSIC_FULL)
    assert [t.prime_or_k for t in r.terms] == list(range(1, 8))
    assert r.residues == [term_classic_full(8, k) for k in range(1, 8)]


@pytest.mark.parametrize("kind", list(TestKind))
def test_small_n_conventions(kind):
    for n in (0, 1):
        r = run_test(n, kind)
        assert r.verdict is Verdict.COMPOSITE and r.terms == [] and r.note
    for n in (2, 3):
        r = run_test(n, kind)
        assert r.verdict is Verdict.PRIME
        if kind in PRIME_KINDS:
            assert r.terms == [] and r.note


def test_pascal_degenerate_bounds():
    r = run_test(2, TestKind.PASCAL)
    assert len(r.terms) == 1 and r.residues == [0] and r.is_prime
    r = run_test(4, TestKind.PASCAL)
    assert r.residues == [0, 2] and not r.is_prime


@pytest.mark.parametrize("kind", [TestKind.CLASSIC_FULL, TestKind.PASCAL])
def test_reduced_unsupported(kind):
    with pytest.raises(UnsupportedMode):
        run_test(11, kind, RED)


def test_default_modes():
    assert run_test(11, TestKind.T21).mode is RED
    assert run_test(11, TestKind.PASCAL).mode is REF
    assert run_test(11, "classic-primes", "reference").mode is REF


def test_budget_overrun_carries_partial_report():
    with pytest.raises(WorkBudgetExceeded) as info:
        run_test(10007, TestKind.CLASSIC_FULL, budget=100)
    partial = info.value.report
    assert partial.verdict is None
    assert len(partial.terms) == 100 and partial.work.mults == 100
    assert partial.residues == [term_classic_full(10007, k) for k in range(1, 101)]

    # 78498 reduced terms for a 13-digit prime fit comfortably
    n = 1000000000039
    assert is_prime_trial(n)
    r = run_test(n, TestKind.T22, RED)
    assert r.is_prime and len(r.terms) == 78498


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("BINOM_WORK_BUDGET", "50")
    with pytest.raises(WorkBudgetExceeded):
        run_test(1009, TestKind.PASCAL)
    assert run_test(1009, TestKind.T22, RED).is_prime


@given(st.integers(4, 10**5))
@settings(max_examples=300, deadline=None)
def test_reference_soundness_prime_kinds(n):
    expected = is_prime_trial(n)
    for kind in PRIME_KINDS:
        assert run_test(n, kind, REF).is_prime == expected


@given(st.integers(4, 20000))
@settings(max_examples=15, deadline=None)
def test_reference_soundness_pascal_sampled(n):
    assert run_test(n, TestKind.PASCAL, REF).is_prime == is_prime_trial(n)


@given(st.integers(4, 10**8))
@settings(max_examples=100, deadline=None)
def test_mode_equivalence_large_n(n):
    for p in primes_up_to_sqrt(n)[:40]:
        assert term_t21(n, p, REF) == term_t21(n, p, RED)
        assert term_t22(n, p, REF) == term_t22(n, p, RED)
        assert term_classic_primes(n, p, REF) == term_classic_primes(n, p, RED)


def test_remark_nondivisor_terms_vanish():
    for q in range(4, 10**4 + 1):
        if is_prime_trial(q):
            continue
        for p in primes_up_to_sqrt(q):
            if q % p:
                assert term_t22(q, p, REF) == 0, (q, p)


def test_witnesses_up_to_ten_thousand(small_divisors):
    for n in range(4, 10**4 + 1):
        assert small_prime_factors(n) == small_divisors[n]


@pytest.mark.parametrize("n, expected", [(100, {2, 5}), (101, set()), (15, {3})])
def test_small_prime_factors_examples(n, expected):
    assert small_prime_factors(n) == expected
    f = factorize_trial(n)
    assert expected == {p for p, _ in f.factors if p * p <= n}


def test_witnesses_big_semiprime():
    n = 1000003 * 1000033
    assert small_prime_factors(n) == {1000003}


def test_short_circuit_keeps_verdict():
    for n in range(2, 3001):
        for kind in TestKind:
            mode = RED if kind in PRIME_KINDS else REF
            full = run_test(n, kind, mode)
            short = run_test(n, kind, mode, short_circuit=True)
            assert short.verdict is full.verdict
            if short.short_circuited:
                assert short.verdict is Verdict.COMPOSITE and short.sum > 0
                assert short.terms[-1].residue != 0
                assert all(t.residue == 0 for t in short.terms[:-1])
            else:
                assert short.terms == full.terms


def test_sum_is_order_independent():
    rng = random.Random(7)
    for n in rng.sample(range(4, 5000), 200):
        r = run_test(n, TestKind.PASCAL)
        res = r.residues
        rng.shuffle(res)
        assert sum(res) == r.sum
        assert (sum(res) == 0) == r.is_prime


def test_term_count_identity():
    for n in list(range(4, 400)) + [10007]:
        for kind in TestKind:
            mode = RED if kind in PRIME_KINDS else REF
            r = run_test(n, kind, mode)
            assert len(r.terms) == r.work.terms == term_count(n, kind)
        assert term_count(n, TestKind.CLASSIC_FULL) == n - 1
        assert term_count(n, TestKind.PASCAL) == (n // 2 - 1) + 1
        assert term_count(n, TestKind.T21) == len(primes_up_to_sqrt(n))


def test_report_invariants_sampled():
    for n in range(4, 2000):
        for kind in PRIME_KINDS:
            r = run_test(n, kind)
            assert all(0 <= t.residue < t.modulus for t in r.terms)
            assert (r.verdict is Verdict.PRIME) == (r.sum == 0) == (not r.witnesses)
            assert all(p * p <= n and is_prime_trial(p) for p in r.witnesses)


@given(st.integers(0, 5000), st.sampled_from(list(TestKind)), st.booleans(), st.booleans())
@settings(deadline=None)
def test_json_roundtrip(n, kind, reference, short):
    mode = REF if reference or kind not in PRIME_KINDS else RED
    report = run_test(n, kind, mode, short_circuit=short)
    text = json.dumps(report.to_json_dict())
    back = TestReport.from_json_dict(json.loads(text))
    assert back == report


def test_json_schema_fields():
    d = run_test(10, TestKind.T21).to_json_dict()
    assert set(d) == {"n", "kind", "mode", "verdict", "sum", "short_circuited", "terms", "witnesses", "work"}
    assert set(d["terms"][0]) == {"index", "prime_or_k", "modulus", "residue"}
    assert set(d["work"]) == {"terms", "mults"}
    assert d["n"] == "10" and d["witnesses"] == ["2"]
