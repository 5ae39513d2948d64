"""CLI tests driven through main(argv): exit codes, parsing, determinism."""

import json

import numpy as np
import pytest

from thirdform import cli

TWO_BLOCK_FILE = """\
# two orthogonal circle directions
2
1 0
0 0   # first operator, row by row
0 0
0 1   # second operator
"""

NOT_UMBILICAL_FILE = """\
2
1 0
0 1
0 0
0 2
"""


def _run(capsys, argv):
    rc = cli.main(argv)
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


class TestAnalyze:
    def test_round_sphere_definite_exit_zero(self, capsys):
        rc, out, err = _run(capsys, [
            "analyze", "--entry", "round_sphere",
            "--param", "n=2", "--param", "r=2.0", "--samples", "8",
        ])
        assert rc == 0 and err == ""
        data = json.loads(out)
        assert data["schema"] == "thirdform-report/1"
        assert data["entry"] == "round_sphere"
        assert data["params"] == {"n": 2, "r": 2.0}
        assert data["verdict"]["kind"] == "RoundSphere"
        assert data["verdict"]["homothety"]["r2"] == pytest.approx(4.0)
        assert len(data["samples"]) == 8
        assert data["meta"]["version"]
        assert data["meta"]["tolerances"]["homothety"] == pytest.approx(1e-6)

    def test_string_params_pass_through(self, capsys):
        rc, out, _ = _run(capsys, [
            "analyze", "--entry", "graph_custom",
            "--param", "q1=1 0 0 2", "--samples", "6",
        ])
        assert rc == 0  # NotHomothetic is a definite verdict
        data = json.loads(out)
        assert data["params"]["q1"] == "1 0 0 2"
        assert data["verdict"]["kind"] == "NotHomothetic"

    def test_inconclusive_exits_two(self, capsys):
        rc, out, _ = _run(capsys, [
            "analyze", "--entry", "veronese", "--samples", "8",
            "--tol-curvature", "1e-14",
        ])
        assert rc == 2
        assert json.loads(out)["verdict"]["kind"] == "Inconclusive"

    def test_unknown_entry_exits_one(self, capsys):
        rc, out, err = _run(capsys, ["analyze", "--entry", "moebius"])
        assert rc == 1
        assert out == ""
        assert "UnknownName" in err

    def test_malformed_param_exits_one(self, capsys):
        rc, _, err = _run(capsys, [
            "analyze", "--entry", "plane", "--param", "oops",
        ])
        assert rc == 1
        assert "key=value" in err

    def test_zero_samples_exits_one(self, capsys):
        rc, _, err = _run(capsys, [
            "analyze", "--entry", "plane", "--samples", "0",
        ])
        assert rc == 1
        assert "SamplingFailed" in err

    def test_text_format(self, capsys):
        rc, out, _ = _run(capsys, [
            "analyze", "--entry", "circle", "--samples", "6",
            "--format", "text",
        ])
        assert rc == 0
        assert "kind: RoundSphere (definite)" in out
        assert "homothety: r^2 = 1" in out

    def test_out_file_reports_are_byte_identical(self, capsys, tmp_path):
        argv = ["analyze", "--entry", "sphere_product", "--param", "m=1",
                "--param", "k=1", "--samples", "8", "--seed", "5"]
        f1, f2 = tmp_path / "a.json", tmp_path / "b.json"
        rc1, out1, _ = _run(capsys, argv + ["--out", str(f1)])
        rc2, out2, _ = _run(capsys, argv + ["--out", str(f2)])
        assert rc1 == rc2 == 0
        assert out1 == out2 == ""
        assert f1.read_bytes() == f2.read_bytes()
        assert json.loads(f1.read_text())["verdict"]["kind"] == "SphereProduct"

    def test_seed_from_environment(self, capsys, monkeypatch):
        monkeypatch.setenv("THIRDFORM_SEED", "11")
        rc, out, _ = _run(capsys, [
            "analyze", "--entry", "plane", "--samples", "4",
        ])
        assert rc == 0
        assert json.loads(out)["meta"]["seed"] == 11

    def test_seed_flag_beats_environment(self, capsys, monkeypatch):
        monkeypatch.setenv("THIRDFORM_SEED", "11")
        rc, out, _ = _run(capsys, [
            "analyze", "--entry", "plane", "--samples", "4", "--seed", "3",
        ])
        assert rc == 0
        assert json.loads(out)["meta"]["seed"] == 3


class TestDecompose:
    def test_two_block_pair(self, capsys, tmp_path):
        spec = tmp_path / "pair.txt"
        spec.write_text(TWO_BLOCK_FILE)
        rc, out, _ = _run(capsys, ["decompose", "--spec-file", str(spec)])
        assert rc == 0
        data = json.loads(out)
        assert data["schema"] == "thirdform-decompose/1"
        assert data["block_count"] == 2
        assert data["block_dims"] == [1, 1]
        assert data["homothety_r2"] == pytest.approx(1.0)
        pairs = {tuple(b["lambda_pair"]) for b in data["blocks"]}
        assert pairs == {(1.0, 0.0), (0.0, 1.0)}

    def test_text_format(self, capsys, tmp_path):
        spec = tmp_path / "pair.txt"
        spec.write_text(TWO_BLOCK_FILE)
        rc, out, _ = _run(capsys, [
            "decompose", "--spec-file", str(spec), "--format", "text",
        ])
        assert rc == 0
        assert "blocks: 2 with dims 1, 1" in out

    def test_not_umbilical_exits_two(self, capsys, tmp_path):
        spec = tmp_path / "bad.txt"
        spec.write_text(NOT_UMBILICAL_FILE)
        rc, out, err = _run(capsys, ["decompose", "--spec-file", str(spec)])
        assert rc == 2
        assert out == ""
        assert "thirdform:" in err

    def test_missing_file_exits_one(self, capsys, tmp_path):
        rc, _, err = _run(capsys, [
            "decompose", "--spec-file", str(tmp_path / "nope.txt"),
        ])
        assert rc == 1
        assert err != ""

    @pytest.mark.parametrize("content,fragment", [
        ("", "empty input"),
        ("x 1 2", "first entry must be the dimension"),
        ("0", "must be positive"),
        ("2 1 0 0 1 0 0 0", "expected 8 matrix entries"),
        ("2 1 0 0 1 0 0 q 1", "could not convert"),
    ])
    def test_malformed_files_exit_one(self, capsys, tmp_path, content, fragment):
        spec = tmp_path / "spec.txt"
        spec.write_text(content)
        rc, _, err = _run(capsys, ["decompose", "--spec-file", str(spec)])
        assert rc == 1
        assert fragment in err

    def test_read_form_file_strips_comments(self, tmp_path):
        spec = tmp_path / "pair.txt"
        spec.write_text(TWO_BLOCK_FILE)
        form = cli.read_form_file(str(spec))
        assert form.n == 2
        assert np.array_equal(form.a1, np.diag([1.0, 0.0]))
        assert np.array_equal(form.a2, np.diag([0.0, 1.0]))


class TestVerifyCatalog:
    def test_filtered_text_run(self, capsys):
        rc, out, _ = _run(capsys, [
            "verify-catalog", "--entry-filter", "clifford",
            "--samples", "6", "--format", "text",
        ])
        assert rc == 0
        assert out.startswith("PASS")
        assert "1/1 entries certified" in out

    def test_filtered_json_run(self, capsys):
        rc, out, _ = _run(capsys, [
            "verify-catalog", "--entry-filter", "veronese", "--samples", "6",
        ])
        assert rc == 0
        data = json.loads(out)
        assert data["schema"].startswith("thirdform-verify/")
        assert data["passed"] is True
        assert [e["entry"] for e in data["entries"]] == ["veronese"]
        assert all(c["passed"] for c in data["entries"][0]["checks"])

    def test_no_matching_entries_is_vacuously_clean(self, capsys):
        rc, out, _ = _run(capsys, [
            "verify-catalog", "--entry-filter", "zebra",
            "--samples", "4", "--format", "text",
        ])
        assert rc == 0
        assert "0/0 entries certified" in out


class TestParser:
    def test_analyze_requires_entry(self):
        with pytest.raises(SystemExit):
            cli.build_parser().parse_args(["analyze"])

    def test_serve_defaults(self):
        args = cli.build_parser().parse_args(["serve"])
        assert args.host == "127.0.0.1"
        assert args.port == 8000
        assert args.func is cli.cmd_serve
