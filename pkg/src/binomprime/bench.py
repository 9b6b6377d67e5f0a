"""Term and multiplication counts for comparing the tests side by side."""

import csv
import time
from dataclasses import dataclass

from .errors import UnsupportedMode, WorkBudgetExceeded
from .primality import EvalMode, TestKind, default_mode, run_test

CSV_COLUMNS = ("n", "kind", "mode", "terms", "mults", "wall_ns", "verdict")
BUDGET_VERDICT = "BUDGET"


@dataclass(frozen=True)
class BenchRow:
    n: int
    kind: TestKind
    mode: EvalMode
    terms_evaluated: int
    multiplications: int
    wall_time_ns: int
    verdict: str  # "PRIME", "COMPOSITE" or "BUDGET"

    def as_csv(self):
        return (str(self.n), self.kind.value, self.mode.value, str(self.terms_evaluated),
                str(self.multiplications), str(self.wall_time_ns), self.verdict)


def modes_for(kind, mode_choice):
    """Modes to run for ``kind`` under a ``--mode`` choice.

    ``"default"`` picks the fast mode, ``"both"`` every supported mode; an
    explicit mode the kind cannot run raises :class:`UnsupportedMode`.
    """
    if mode_choice == "default":
        return [default_mode(kind)]
    if mode_choice == "both":
        return [EvalMode.REFERENCE, EvalMode.REDUCED] if kind.supports_reduced else [EvalMode.REFERENCE]
    mode = EvalMode(mode_choice)
    if mode is EvalMode.REDUCED and not kind.supports_reduced:
        raise UnsupportedMode(f"{kind.value} has no reduced evaluator")
    return [mode]


def bench_one(n, kind, mode, budget=None):
    start = time.perf_counter_ns()
    try:
        report = run_test(n, kind, mode, budget=budget)
        verdict = report.verdict.value
    except WorkBudgetExceeded as exc:
        report = exc.report
        verdict = BUDGET_VERDICT
    elapsed = time.perf_counter_ns() - start
    return BenchRow(n, kind, mode, report.work.terms, report.work.mults, elapsed, verdict)


def run_bench(ns, kinds, mode_choice="default", budget=None):
    """Rows ordered by ``(n, kind)`` with kinds in canonical order."""
    order = list(TestKind)
    kinds = sorted(set(kinds), key=order.index)
    plan = [(kind, modes_for(kind, mode_choice)) for kind in kinds]
    rows = []
    for n in ns:
        for kind, modes in plan:
            for mode in modes:
                rows.append(bench_one(n, kind, mode, budget))
    return rows


def write_csv(rows, fh):
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(row.as_csv())


def read_csv(fh):
    rows = []
    for rec in csv.DictReader(fh):
        rows.append(BenchRow(int(rec["n"]), TestKind(rec["kind"]), EvalMode(rec["mode"]),
                             int(rec["terms"]), int(rec["mults"]), int(rec["wall_ns"]),
                             rec["verdict"]))
    return rows
