import pytest

from wminus.trace import EXPECTED_MISMATCH, MATCH, MISMATCH, RelationReport
from wminus.verify import Bounds, exit_code, load_manifest, render_reports, run_suite, suite_phi


def test_shipped_manifest_loads():
    entries = load_manifest()
    assert len(entries) >= 40
    assert {e.mode for e in entries} <= {"exact", "leading"}
    assert any(e.expect == EXPECTED_MISMATCH for e in entries)


def test_manifest_errors(tmp_path):
    bad = tmp_path / "m.txt"
    bad.write_text("x | h[1] | h[1] | fuzzy | MATCH\n")
    with pytest.raises(ValueError):
        load_manifest(str(bad))
    bad.write_text("x | h[1] | h[1] | exact | MATCH\nx | h[1] | h[1] | exact | MATCH\n")
    with pytest.raises(ValueError):
        load_manifest(str(bad))


def test_custom_manifest_statuses(tmp_path):
    m = tmp_path / "m.txt"
    m.write_text(
        "# comment\n"
        "ok | [h[1], H[-1]] | -2 | exact | MATCH\n"
        "known | [h[1], H[-1]] | 2 | exact | EXPECTED-MISMATCH | sign flipped on purpose\n"
        "wrong | [h[1], H[-1]] | 3 | exact | MATCH\n"
        "missing | [h9x9, H[-1]] | 0 | exact | NOT-EXPRESSIBLE\n"
    )
    reports = suite_phi(Bounds(phi_size=3), load_manifest(str(m)))
    by = {r.instance: r for r in reports}
    assert by["ok [pbw]"].status == MATCH
    assert by["known [fock3]"].status == EXPECTED_MISMATCH
    assert by["wrong [pbw]"].status == MISMATCH and by["wrong [pbw]"].unexpected
    assert not by["missing [pbw]"].unexpected
    assert exit_code(reports) == 1


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope")


def test_bad_bounds():
    with pytest.raises(ValueError):
        run_suite("lie", Bounds(samples=0))


def test_deterministic_and_sorted():
    b = Bounds(samples=60, pbw_triples=30)
    first = run_suite("lie", b) + run_suite("pbw", b)
    second = run_suite("lie", b) + run_suite("pbw", b)
    assert render_reports(first, "machine") == render_reports(second, "machine")
    keys = [(r.suite, r.instance) for r in first]
    assert keys == sorted(keys)


def test_gen_suite_reports_engine_values():
    reports = run_suite("gen")
    rows = [r for r in reports if r.instance.startswith("action-row")]
    assert len(rows) == 16
    assert all(r.detail.startswith("engine: ") for r in rows)
    assert all(not r.unexpected for r in reports)


def test_render_formats():
    reps = [RelationReport("s", "a", MATCH), RelationReport("s", "b", MISMATCH, "1*w[1,0]")]
    machine = render_reports(reps, "machine").splitlines()
    assert "s/a\tMATCH" in machine
    assert "s/b#difference\t1*w[1,0]" in machine
    assert "summary/unexpected\t1" in machine
    text = render_reports(reps)
    assert "unexpected: 1" in text.splitlines()[-1]
    assert exit_code(reps) == 1
