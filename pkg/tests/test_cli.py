import csv
import subprocess
import sys

import pytest

from quatzeros.cli import EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, main


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


@pytest.fixture
def example(tmp_path):
    return write(tmp_path, "ex.yaml", "side: left\ncoeffs: [[0, 0, 0, 1], [0, -1, -1, 0], [1, 0, 0, 0]]\n")


class TestBounds:
    def test_table(self, example, capsys):
        assert main(["bounds", "--input", example]) == EXIT_OK
        out = capsys.readouterr().out
        assert "degree 2, side left, lacunary r = 1" in out
        assert "2.41421356237309" in out
        assert "gershgorin balls of CF:" in out

    def test_monomial(self, tmp_path, capsys):
        path = write(tmp_path, "m.yaml", "side: right\ncoeffs: [0, 0, 0, 1]\n")
        assert main(["bounds", "--input", path, "--methods", "CAUCHY"]) == EXIT_OK
        row = [l for l in capsys.readouterr().out.splitlines() if l.startswith("CAUCHY")][0]
        assert row.split()[1] == "1"

    def test_ratio_inapplicable(self, tmp_path, capsys):
        path = write(tmp_path, "r.yaml", "side: right\ncoeffs: [2, 0, 3, 1]\n")
        assert main(["bounds", "--input", path, "--methods", "RATIO"]) == EXIT_OK
        row = [l for l in capsys.readouterr().out.splitlines() if l.startswith("RATIO")][0]
        assert " - " in row and "false" in row

    def test_normalises_and_writes_csv(self, tmp_path, capsys):
        path = write(tmp_path, "n.yaml", "side: left\ncoeffs: [2, 0, 2]\n")
        out = tmp_path / "b.csv"
        assert main(["bounds", "--input", path, "--out", str(out), "--dump-matrix"]) == EXIT_OK
        text = capsys.readouterr().out
        assert "# input normalised to monic form" in text
        assert "CF =" in text
        rows = list(csv.reader(out.open(encoding="utf-8")))
        assert rows[0][:4] == ["degree", "method", "params", "radius"]
        assert float(rows[1][3]) == 2.0

    def test_bad_method(self, example, capsys):
        assert main(["bounds", "--input", example, "--methods", "NEWTON"]) == EXIT_USAGE
        assert "error:" in capsys.readouterr().err

    def test_bad_fujiwara_weights(self, example, capsys):
        assert main(["bounds", "--input", example, "--fujiwara", "0.2,0.2"]) == EXIT_USAGE


class TestRoots:
    def test_example(self, example, capsys):
        assert main(["roots", "--input", example]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 1 and lines[0].startswith("isolated 0 0 1 0 ")

    def test_sphere(self, tmp_path, capsys):
        path = write(tmp_path, "s.yaml", "side: left\ncoeffs: [1, 0, 1]\n")
        assert main(["roots", "--input", path]) == EXIT_OK
        assert capsys.readouterr().out.startswith("spherical 0 1 ")

    def test_degree_zero(self, tmp_path, capsys):
        path = write(tmp_path, "c.yaml", "side: left\ncoeffs: [3]\n")
        assert main(["roots", "--input", path]) == EXIT_USAGE
        assert "degree >= 1 required" in capsys.readouterr().err

    @pytest.mark.parametrize("text", ["side: left\ncoeffs: [[.inf, 0, 0, 0], 1]\n", "nonsense: ["])
    def test_parse_errors(self, tmp_path, text):
        assert main(["roots", "--input", write(tmp_path, "bad.yaml", text)]) == EXIT_USAGE

    def test_missing_file(self, tmp_path):
        assert main(["roots", "--input", str(tmp_path / "none.yaml")]) == EXIT_USAGE


class TestVerifyBench:
    def test_verify_exit_ok(self, tmp_path, capsys):
        out = tmp_path / "v.csv"
        code = main(["verify", "--seed", "1", "--degrees", "2..4", "--samples", "20", "--out", str(out)])
        assert code == EXIT_OK
        assert "violations=0" in capsys.readouterr().out
        assert out.exists()

    def test_verify_zero_samples(self, capsys):
        assert main(["verify", "--samples", "0"]) == EXIT_USAGE
        assert "samples" in capsys.readouterr().err

    def test_bench_stdout(self, capsys):
        assert main(["bench", "--samples", "5", "--degrees", "3", "--methods", "CAUCHY,GERSHGORIN"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "sample,degree,side,method,radius,maxZeroNorm,slack"
        assert sum(1 for l in lines if "," in l) == 1 + 5 * 2

    def test_bad_degrees(self):
        assert main(["bench", "--degrees", "a..b"]) == EXIT_USAGE

    def test_violation_exit_code(self, monkeypatch):
        from quatzeros import cli
        from quatzeros.harness import VerifyReport, MethodStats
        report = VerifyReport(per_method={"CAUCHY": MethodStats(checked=1, violations=1)}, samples=1)
        monkeypatch.setattr(cli, "run_verify", lambda cfg: report)
        assert main(["verify", "--samples", "1"]) == EXIT_VIOLATION


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "quatzeros", "--help"], capture_output=True, text=True)
    assert res.returncode == 0 and "bounds" in res.stdout
