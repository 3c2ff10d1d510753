"""Acceptance criteria 1-9, each checked exactly (no tolerances).

Each test records a one-line verdict; the lines are printed in the pytest
terminal summary, or directly when this file is run as a script.
"""

import time

import pytest

from wminus.dims import distinct_partition_count, multiset_generator_count, odd_partition_count, series_coefficients
from wminus.fock import representation_defects
from wminus.trace import EXPECTED_MISMATCH, MATCH
from wminus.verify import Bounds, load_manifest, run_suite

RESULTS: dict = {}


def record(n, ok, note):
    RESULTS[n] = f"criterion {n}: {'PASS' if ok else 'FAIL'} - {note}"
    assert ok, RESULTS[n]


def by_instance(reports):
    return {r.instance: r for r in reports}


def test_criterion_1_cocycle_and_jacobi():
    start = time.perf_counter()
    reports = by_instance(run_suite("lie", Bounds(max_t=6, max_d=5, samples=500, seed=0)))
    secs = time.perf_counter() - start
    ok = (
        reports["jacobi sampled=500"].status == MATCH
        and reports["antisymmetry sampled=500"].status == MATCH
        and secs < 30
    )
    record(1, ok, f"Jacobi and antisymmetry on 500 seeded triples, |t| <= 6, D <= 5 ({secs:.1f}s)")


def test_criterion_2_representation():
    start = time.perf_counter()
    bad = representation_defects(6, 5, 10)
    secs = time.perf_counter() - start
    record(2, not bad and secs < 120,
           f"[act x, act y] = act [x, y] with C = 1 on partitions of size <= 10; {len(bad)} defects ({secs:.1f}s)")


def test_criterion_3_twisted_heisenberg():
    reports = by_instance(run_suite("heis", Bounds(heis_max=11)))
    ok = reports["odd modes bracket |index|<=11"].status == MATCH
    record(3, ok, "[t^p, t^q] = p delta(p,-q) C for odd |p|, |q| <= 11")


def test_criterion_4_pbw_confluence():
    reports = by_instance(run_suite("pbw", Bounds(pbw_triples=240)))
    record(4, reports["confluence triples=240"].status == MATCH, "associativity of normal forms on 240 seeded triples")


def test_criterion_5_closure_and_sigma():
    reports = by_instance(run_suite("lie"))
    names = ["closure of W- basis", "sigma squared is the identity", "minus sigma fixes the basis family",
             "membership example"]
    ok = all(reports[n].status == MATCH for n in names)
    record(5, ok, "closure, sigma^2 = id, -sigma fixes the basis, membership example")


def test_criterion_6_generation_identities():
    reports = run_suite("gen", Bounds(gen_max=3))
    by = by_instance(reports)
    vectors = [by["vector [w[1,0], w[0,3]]"], by["vector [w[-2,1] - w[-2,0], w[1,0]]"]]
    eq5 = [r for r in reports if r.instance.startswith("odd-from-even")]
    others = [r for r in reports if r.instance.startswith(("top-odd", "even-from-odd", "zero-mode"))]
    ok = (
        all(r.status == MATCH for r in vectors)
        and len(eq5) == 6 and all(r.status == MATCH for r in eq5)
        and len(others) == 15 and all(r.status in (MATCH, EXPECTED_MISMATCH) for r in others)
    )
    mism = sum(1 for r in others if r.status == EXPECTED_MISMATCH)
    record(6, ok, f"both vectors and 6 odd-from-even cases MATCH; {len(others) - mism} companions MATCH, "
                  f"{mism} documented mismatches")


def test_criterion_7_dimension_tables():
    start = time.perf_counter()
    table = series_coefficients(9, 9)
    grid_ok = all(table[(r, k)] == multiset_generator_count(r, k) for r in range(10) for k in range(10))
    parts_ok = all(odd_partition_count(n) == distinct_partition_count(n) for n in range(21))
    secs = time.perf_counter() - start
    record(7, grid_ok and parts_ok and secs < 5, f"10x10 grid and odd = distinct for n <= 20 ({secs:.2f}s)")


def test_criterion_8_phi_consistency():
    start = time.perf_counter()
    reports = run_suite("phi", Bounds(phi_size=8))
    secs = time.perf_counter() - start
    by = by_instance(reports)
    manifest = load_manifest()
    plain = [e for e in manifest if e.expect == MATCH]
    checked = [by[f"{e.id} [{tag}]"] for e in plain for tag in ("pbw", "fock8")]
    diag = [by[f"heis-pair n={n},m={n} [{tag}]"] for n in range(3) for tag in ("pbw", "fock8")]
    raise_ = [by[f"raise-odd m={m} [{tag}]"] for m in (-3, -1, 1, 3) for tag in ("pbw", "fock8")]
    ok = (
        by["calibration solve"].status == MATCH
        and all(r.status == MATCH for r in checked + diag + raise_)
        and not any(r.unexpected for r in reports)
        and secs < 300
    )
    record(8, ok, f"{len(plain)} unannotated manifest relations MATCH in pbw and fock(8) ({secs:.1f}s)")


def test_criterion_9_errata_report():
    reports = run_suite("gen")
    rows = [r for r in reports if r.instance.split()[0] in ("action-row2", "action-row3", "action-row4")]
    ok = len(rows) == 12 and all(r.detail.startswith("engine: ") and not r.unexpected for r in rows)
    summary = ", ".join(sorted({f"{r.instance.split()[0]} {r.status}" for r in rows}))
    record(9, ok, f"12 action-row reports with engine right-hand sides ({summary})")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
