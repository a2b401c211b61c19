"""End-to-end command-line behavior: reports, determinism, exit codes."""
from __future__ import annotations

import json

import pytest

from cuspidal.cli import main

SPEC49 = "n = 4\nm = 9\nz 1 = 1\n"
SPEC45 = "n = 4\nm = 5\nz 2 = 1\n"


@pytest.fixture
def spec49(tmp_path):
    p = tmp_path / "c49.spec"
    p.write_text(SPEC49)
    return str(p)


@pytest.fixture
def spec45(tmp_path):
    p = tmp_path / "c45.spec"
    p.write_text(SPEC45)
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_semigroup_report(capsys, spec49):
    code, out, _ = run(capsys, "semigroup", "--spec", spec49)
    assert code == 0
    assert "conductor = 24" in out
    assert "gaps = 1 2 3 5 6 7 10 11 14 15 19 23" in out


def test_cuspidal_sets_report(capsys, spec49):
    code, out, _ = run(capsys, "cuspidal-sets", "--spec", spec49)
    assert code == 0
    assert "J = 1 2 6 10" in out
    assert "M = 1,2 3,1 2,1 1,1" in out


def test_delorme_report(capsys, spec49):
    code, out, _ = run(capsys, "delorme", "--spec", spec49)
    assert code == 0
    assert "basis = 4 9 14 19" in out
    assert "h_leading = 0,3 8,0 7,1 6,2" in out


def test_bs_roots_report(capsys, spec49):
    code, out, _ = run(capsys, "bs-roots", "--spec", spec49)
    assert code == 0
    assert "roots = -23/36 -19/36 -7/18" in out
    assert "independence_assumed = no" in out
    assert "verdict j=10 = beta_root root=-23/36 witness=1,2 decision=nonzero" in out


def test_residue_report(capsys, spec49):
    code, out, _ = run(capsys, "residue", "--spec", spec49, "--j", "10",
                       "--ab", "1,2")
    assert code == 0
    assert "expr = (-1)*Gamma(3/4)*Gamma(8/9)" in out
    assert "decision = nonzero" in out
    assert "k = 1" in out


def test_jacobian_report(capsys, spec49):
    code, out, _ = run(capsys, "jacobian", "--spec", spec49)
    assert code == 0
    assert "tjurina = 21" in out
    assert "match = yes" in out


def test_enumerate_report(capsys, spec49):
    code, out, _ = run(capsys, "enumerate", "--spec", spec49)
    assert code == 0
    assert "count = 6" in out


def test_verify_passes(capsys, spec45):
    code, out, _ = run(capsys, "verify", "--spec", spec45)
    assert code == 0
    assert "verify = ok" in out
    assert "oracle_basis_forms = ok" in out
    assert "oracle_random_forms = ok 50/50" in out
    assert "certified_roots = ok -11/20" in out


def test_conjecture_scan_small(capsys):
    code, out, _ = run(capsys, "conjecture-scan", "--max-m", "7", "--seed", "3")
    assert code == 0
    assert "failures = 0" in out
    assert "curves = 15" in out


def test_output_is_deterministic(capsys, spec49):
    _, first, _ = run(capsys, "bs-roots", "--spec", spec49)
    _, second, _ = run(capsys, "bs-roots", "--spec", spec49)
    assert first == second


def test_json_mode_round_trips(capsys, spec49):
    code, out, _ = run(capsys, "delorme", "--spec", spec49, "--json")
    assert code == 0
    data = json.loads(out)
    assert data["basis"] == [4, 9, 14, 19]
    assert data["s"] == 2
    _, again, _ = run(capsys, "delorme", "--spec", spec49, "--json")
    assert out == again


@pytest.mark.parametrize("content,fragment", [
    ("n = 4\nm = 8\nz 1 = 1\n", "invalid_pair"),
    ("n = 4\nm = 5\nz 3 = 1\n", "coefficient_outside_J"),
    ("nonsense\n", "parse_error"),
])
def test_spec_errors_exit_two(capsys, tmp_path, content, fragment):
    p = tmp_path / "bad.spec"
    p.write_text(content)
    code, _, err = run(capsys, "semigroup", "--spec", str(p))
    assert code == 2
    assert fragment in err


def test_missing_file_exits_two(capsys, tmp_path):
    code, _, err = run(capsys, "semigroup", "--spec", str(tmp_path / "nope"))
    assert code == 2
    assert "cannot read" in err


def test_negative_k_exits_two(capsys, spec49):
    code, _, err = run(capsys, "residue", "--spec", spec49, "--j", "1",
                       "--ab", "3,1")
    assert code == 2
    assert "negative_k" in err


def test_bad_j_exits_two(capsys, spec49):
    code, _, err = run(capsys, "residue", "--spec", spec49, "--j", "3",
                       "--ab", "1,1")
    assert code == 2
    assert "not a cuspidal gap value" in err


def test_precision_override_changes_certificate(capsys, spec49):
    _, out512, _ = run(capsys, "residue", "--spec", spec49, "--j", "10",
                       "--ab", "1,2", "--precision", "512")
    assert "precision_bits = 512" in out512
