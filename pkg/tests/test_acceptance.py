"""Acceptance gate: one named criterion per suite, one printed line each.

Each criterion runs a shared invariant suite (the same code behind
`eqstates verify <name>`) under a wall-clock budget and reports
pass/fail with the per-check details on failure.
"""

import time

import pytest

from eqstates.suites import run_suite

CRITERIA = [
    ("C1 bernoulli calibration", "bernoulli", 5.0),
    ("C2 beta language oracle equivalence", "beta-oracles", 30.0),
    ("C3 entropy brackets", "entropy", 60.0),
    ("C4 specification gaps and witnesses", "specification", 60.0),
    ("C5 summability verdicts and variation growth", "bowen", 30.0),
    ("C6 periodic-orbit measure invariance", "invariance", 30.0),
    ("C7 intermittent-family phase structure", "mp-phase", 600.0),
    ("C8 partition-sum submultiplicativity", "submultiplicative", 60.0),
    ("C9 byte-identical reruns", "determinism", 120.0),
]


@pytest.mark.parametrize("label,suite,budget", CRITERIA, ids=[c[1] for c in CRITERIA])
def test_acceptance(label, suite, budget, capsys):
    t0 = time.perf_counter()
    result = run_suite(suite)
    elapsed = time.perf_counter() - t0
    ok = result["passed"] and elapsed < budget
    with capsys.disabled():
        print(f"[{'PASS' if ok else 'FAIL'}] {label} ({elapsed:.1f}s / {budget:.0f}s)")
    if not ok:
        details = "\n".join(
            f"  [{'ok' if good else 'BAD'}] {name}: {detail}"
            for name, good, detail in result["checks"]
        )
        pytest.fail(f"{label} failed in {elapsed:.1f}s (budget {budget:.0f}s)\n{details}")
