"""Verification harness reports and the command line surface (in process)."""

import csv
import io
import json

import pytest

from cliffmod.cli import main
from cliffmod.clifford import Multivector
from cliffmod.congruence import GroupDescriptor, enumerate_cosets
from cliffmod.harness import (CHECK_BUILDERS, DEFAULT_THRESHOLDS, THRESHOLDS_VERSION,
                              VerificationReport, run_checks)
from cliffmod.series import SeriesSpec, scalar_eisenstein


# ---- harness ----------------------------------------------------------------


def test_run_checks_subset():
    reports = run_checks(["clifford", "mobius", "kernel"], seed=7)
    assert [r.check for r in reports] == ["clifford_relations", "mobius_homomorphism",
                                          "kernel_multiplicativity"]
    assert all(r.passed for r in reports)
    assert all(r.residual <= r.threshold for r in reports
               if r.residual is not None and r.threshold is not None)


def test_run_checks_unknown_name():
    with pytest.raises(ValueError):
        run_checks(["clifford", "nonsense"])


def test_threshold_override_can_fail_a_check():
    rep, = run_checks(["kernel"], seed=7, thresholds={"kernel_multiplicativity": 0.0})
    assert not rep.passed
    assert rep.threshold == 0.0


def test_report_shape():
    rep, = run_checks(["kernel"], seed=0, deterministic=True)
    d = rep.to_json_dict()
    for key in ("check", "params", "pass", "seconds", "residual", "threshold"):
        assert key in d
    assert d["seconds"] == 0.0
    line = rep.summary_line()
    assert "kernel_multiplicativity" in line and ("PASS" in line or "FAIL" in line)
    assert set(CHECK_BUILDERS) >= {"clifford", "mobius", "kernel", "monogenic", "jets",
                                   "cosets", "limits", "collapse", "automorphy",
                                   "polymono", "zeta", "abscissa"}
    assert THRESHOLDS_VERSION == "1"
    assert set(DEFAULT_THRESHOLDS)  # nonempty tolerance table


# ---- cli: cosets ---------------------------------------------------------------


def test_cli_cosets_json(tmp_path):
    out = tmp_path / "cosets.json"
    code = main(["cosets", "--n", "4", "--p", "1", "--maxlen", "4",
                 "--outfile", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    reps = enumerate_cosets(GroupDescriptor.full(4, 1), 4)
    assert payload["count"] == len(reps)
    assert payload["count_c_zero"] == sum(1 for r in reps if r.is_c_zero())
    assert payload["contains_neg_identity"] is True
    assert payload["translation_lattice_scale"] == 1
    first = payload["cosets"][0]
    assert set(first) >= {"word_length", "height", "c_zero", "a", "b", "c", "d", "word"}


def test_cli_cosets_csv(tmp_path):
    out = tmp_path / "cosets.csv"
    assert main(["cosets", "--n", "4", "--p", "1", "--group", "theta",
                 "--maxlen", "4", "--out", "csv", "--outfile", str(out)]) == 0
    rows = list(csv.DictReader(io.StringIO(out.read_text())))
    assert rows
    assert set(rows[0]) == {"word_length", "height", "c_zero", "a", "b", "c", "d"}


def test_cli_cosets_level_validation(capsys):
    assert main(["cosets", "--n", "4", "--p", "1", "--group", "principal"]) == 2
    assert "level" in capsys.readouterr().err
    assert main(["cosets", "--n", "4", "--p", "1", "--level", "2"]) == 2


# ---- cli: eval -----------------------------------------------------------------


def test_cli_eval_matches_library(tmp_path):
    out = tmp_path / "eval.json"
    code = main(["eval", "--n", "5", "--p", "1", "--series", "scalar", "--s", "2",
                 "--maxlen", "3", "--outfile", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    spec = SeriesSpec("scalar", GroupDescriptor.full(5, 1), 2, word_limit=3)
    for entry, height in zip(payload["results"], (1.0, 2.0)):
        x = Multivector.vector([0.0, 0.0, 0.0, 0.0, height])
        expect = scalar_eisenstein(x, spec)
        got = entry["value"]["components"]
        assert got["00000"] == pytest.approx(expect.value.scalar_part(), rel=1e-12)
        assert entry["n_terms"] == expect.n_terms
        levels = [p["level"] for p in entry["partial_sums"]]
        assert levels == list(range(4))


def test_cli_eval_points_file(tmp_path):
    pts = tmp_path / "pts.json"
    pts.write_text(json.dumps([[0.1, -0.2, 0.0, 0.0, 1.5]]))
    out = tmp_path / "eval.json"
    assert main(["eval", "--n", "5", "--p", "1", "--series", "scalar", "--s", "2",
                 "--maxlen", "2", "--points", str(pts), "--outfile", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert len(payload["results"]) == 1
    assert payload["results"][0]["point"]["components"]["00001"] == pytest.approx(1.5)
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps([[1.0, 2.0]]))  # wrong arity
    assert main(["eval", "--n", "5", "--p", "1", "--series", "scalar", "--s", "2",
                 "--points", str(bad)]) == 2


def test_cli_eval_vector_and_biregular(tmp_path):
    out = tmp_path / "v.json"
    assert main(["eval", "--n", "4", "--p", "1", "--series", "vector", "--s", "1",
                 "--m", "0,0,0,3", "--box", "1", "--maxlen", "2",
                 "--outfile", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["spec"]["m"] == [0, 0, 0, 3]
    out2 = tmp_path / "b.csv"
    assert main(["eval", "--n", "4", "--p", "1", "--series", "biregular", "--s", "1",
                 "--t", "1", "--maxlen", "2", "--out", "csv", "--outfile", str(out2)]) == 0
    rows = list(csv.reader(io.StringIO(out2.read_text())))
    assert rows[0] == ["point", "second_point", "value"]
    assert len(rows) == 3


def test_cli_eval_divergent_spec_is_usage_error(capsys):
    # weight too large for the dimension: the convergence check refuses
    assert main(["eval", "--n", "4", "--p", "1", "--series", "scalar", "--s", "2"]) == 2
    assert "error:" in capsys.readouterr().err


# ---- cli: verify ---------------------------------------------------------------


def test_cli_verify_pass_and_summary(tmp_path, capsys):
    out = tmp_path / "verify.json"
    code = main(["verify", "--check", "clifford", "--check", "kernel",
                 "--seed", "3", "--outfile", str(out)])
    assert code == 0
    err = capsys.readouterr().err
    assert "clifford" in err and "kernel" in err
    payload = json.loads(out.read_text())
    assert payload["all_passed"] is True
    assert payload["thresholds_version"] == THRESHOLDS_VERSION
    assert [r["check"] for r in payload["reports"]] == ["clifford_relations",
                                                        "kernel_multiplicativity"]


def test_cli_verify_failure_exit_code(tmp_path):
    out = tmp_path / "verify.json"
    code = main(["verify", "--check", "kernel",
                 "--threshold", "kernel_multiplicativity=0", "--outfile", str(out)])
    assert code == 1
    assert json.loads(out.read_text())["all_passed"] is False


def test_cli_verify_usage_errors(capsys):
    assert main(["verify"]) == 2
    assert main(["verify", "--check", "kernel", "--threshold", "oops"]) == 2
    assert main(["verify", "--check", "nonsense"]) == 2
    capsys.readouterr()


def test_cli_verify_deterministic_is_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    argv = ["verify", "--check", "kernel", "--check", "mobius", "--deterministic"]
    assert main(argv + ["--outfile", str(a)]) == 0
    assert main(argv + ["--outfile", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_cli_verify_csv(tmp_path):
    out = tmp_path / "verify.csv"
    assert main(["verify", "--check", "kernel", "--out", "csv",
                 "--outfile", str(out)]) == 0
    rows = list(csv.reader(io.StringIO(out.read_text())))
    assert rows[0] == ["check", "pass", "residual", "count", "threshold", "target", "seconds"]
    assert rows[1][0] == "kernel_multiplicativity"


# ---- cli: limits ---------------------------------------------------------------


def test_cli_limits(tmp_path, capsys):
    out = tmp_path / "limits.json"
    code = main(["limits", "--n", "5", "--p", "1", "--series", "scalar", "--s", "2",
                 "--maxlen", "6", "--tvals", "10,30", "--outfile", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["check"] == "limit_scalar"
    assert payload["pass"] is True
    assert main(["limits", "--n", "5", "--tvals", "ten"]) == 2
    capsys.readouterr()


def test_cli_unknown_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
