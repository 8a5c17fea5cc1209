"""Exit criteria: each test checks one criterion at its stated time budget and
records a PASS/FAIL line that is printed in the terminal summary."""

import subprocess
import sys
import time

import pytest

from conftest import ACCEPTANCE_LINES
from finring.ringspec import build_ring
from finring.verifier import DEFAULT_REGISTRY, run_theorem

PSEUDO_RINGS = ["zmod:4", "zmod:6", "zmod:8", "zmod:9", "zmod:12", "tri:2:zmod:2", "mat:2:zmod:2"]
# registry plus one order-256 ring for the Cline timing budget
CLINE_RINGS = DEFAULT_REGISTRY + ["mat:2:zmod:4"]


def _record(number, name, ok, detail):
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {number}. {name}: {detail}")
    print(ACCEPTANCE_LINES[-1])


def _sweep(theorem_ids, rings):
    """Run every theorem on freshly built rings (no shared memo), return (reports, seconds)."""
    start = time.perf_counter()
    reports = []
    for spec in rings:
        r = build_ring(spec)
        reports.extend(run_theorem(tid, r) for tid in theorem_ids)
    return reports, time.perf_counter() - start


def _failures(reports):
    return [(r.theorem_id, r.ring, f) for r in reports for f in r.failures]


def test_1_radical_chain():
    worst = 0.0
    failures = []
    for spec in DEFAULT_REGISTRY:
        reports, secs = _sweep(["RADICAL_CHAIN"], [spec])
        worst = max(worst, secs)
        failures += _failures(reports)
    ok = not failures and worst < 1.0
    _record(1, "radical chain J ⊆ J# ⊆ qnil", ok, f"{len(failures)} failures, slowest ring {worst:.3f}s (< 1s)")
    assert ok, failures[:3]


def test_2_jacobson_lemma():
    reports, secs = _sweep(["JACOBSON_LEMMA"], DEFAULT_REGISTRY)
    failures = _failures(reports)
    checked = sum(r.cases_checked for r in reports)
    ok = not failures and secs < 5.0
    _record(2, "Jacobson's lemma", ok, f"{checked} pairs checked, {len(failures)} failures, {secs:.2f}s (< 5s)")
    assert ok, failures[:3]


def test_3_cline_all_variants():
    reports, secs = _sweep(["CLINE_D", "CLINE_GD", "CLINE_PD"], CLINE_RINGS)
    coincidence, csecs = _sweep(["FINITE_COINCIDENCE"], DEFAULT_REGISTRY)
    failures = _failures(reports) + _failures(coincidence)
    checked = sum(r.cases_checked for r in reports)
    ok = not failures and secs < 60.0
    _record(3, "Cline's formula (D, gD, pD) + variant coincidence", ok,
            f"{checked} cases, {len(failures)} failures, {secs:.2f}s (< 60s)")
    assert ok, failures[:3]


def test_4_strongly_clean_transfer():
    rings = [s for s in DEFAULT_REGISTRY if build_ring(s).order <= 64]
    reports, secs = _sweep(["STRONGLY_CLEAN_TRANSFER", "ONE_MINUS_CLEAN"], rings)
    failures = _failures(reports)
    ok = not failures and secs < 60.0
    _record(4, "strongly clean ab→ba and 1−ab→1−ba", ok, f"{len(failures)} failures, {secs:.2f}s (< 60s)")
    assert ok, failures[:3]


def test_5_pseudo_one_minus():
    reports, secs = _sweep(["PSEUDO_ONE_MINUS"], PSEUDO_RINGS)
    failures = _failures(reports)
    checked = sum(r.cases_checked for r in reports)
    ok = not failures and checked > 0
    _record(5, "pseudo Drazin 1−ab→1−ba (inverse, idempotent, index)", ok,
            f"{checked} pairs, {len(failures)} failures, {secs:.2f}s")
    assert ok, failures[:3]


def test_6_corner_equivalences():
    rings = [s for s in DEFAULT_REGISTRY if build_ring(s).order <= 64]
    ids = ["CORNER_CLEAN", "CORNER_PI_REGULAR", "CORNER_QUASIPOLAR", "CORNER_PSEUDOPOLAR"]
    reports, secs = _sweep(ids, rings)
    failures = _failures(reports)
    ok = not failures and secs < 120.0
    _record(6, "corner ring equivalences", ok,
            f"{sum(r.cases_checked for r in reports)} (e, a) cases, {len(failures)} failures, {secs:.2f}s (< 120s)")
    assert ok, failures[:3]


def test_7_decompositions_and_s_sharp():
    ids = ["DECOMP_EQUIV_1_1", "DECOMP_EQUIV_1_2", "DECOMP_EQUIV_1_3", "LEMMA_S_SHARP", "KOLIHA_EQUIV"]
    reports, secs = _sweep(ids, DEFAULT_REGISTRY)
    failures = _failures(reports)
    ok = not failures
    _record(7, "decomposition equivalences and a^D = s^#", ok, f"{len(failures)} failures, {secs:.2f}s")
    assert ok, failures[:3]


def test_8_uniqueness():
    reports, secs = _sweep(["UNIQUENESS"], DEFAULT_REGISTRY)
    failures = _failures(reports)
    ok = not failures
    _record(8, "uniqueness of Drazin-type inverses", ok, f"{len(failures)} failures, {secs:.2f}s")
    assert ok, failures[:3]


@pytest.mark.slow
def test_9_determinism():
    cmd = [sys.executable, "-m", "finring.cli", "verify", "--theorem", "all", "--ring", "registry", "--json"]
    first = subprocess.run(cmd, capture_output=True, check=False)
    second = subprocess.run(cmd, capture_output=True, check=False)
    ok = first.returncode == 0 and second.returncode == 0 and first.stdout == second.stdout and first.stdout
    _record(9, "byte-identical verify --json reports", bool(ok),
            f"exit codes {first.returncode}/{second.returncode}, {len(first.stdout)} bytes, identical={first.stdout == second.stdout}")
    assert ok
