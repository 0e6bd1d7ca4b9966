import json
import re
import subprocess
import sys

import pytest

from monopath import verify
from monopath.cli import main
from monopath.errors import UnsupportedDimension
from monopath.plot import plot_slice


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    return json.loads(out)


class TestCount:
    def test_catalan(self, capsys):
        got = run_json(capsys, "count", "--lambda", "2,2,2")
        assert got == {"lambda": [2, 2, 2], "multinomial": 90, "coherent": 30, "regions": 30,
                       "charpoly": [0, 20, -9, 1]}

    def test_braid(self, capsys):
        got = run_json(capsys, "count", "--lambda", "1,1")
        assert (got["multinomial"], got["coherent"]) == (2, 2)

    @pytest.mark.parametrize("lam", ["0,1", "2,x", ""])
    def test_bad_lambda(self, capsys, lam):
        code, _, err = run(capsys, "count", "--lambda", lam)
        assert code == 2 and err

    def test_missing_lambda(self, capsys):
        assert run(capsys, "count")[0] == 2


class TestCheck:
    def test_nesting_word(self, capsys):
        got = run_json(capsys, "check", "--word", "12211")
        assert got["coherent"] is False
        assert got["certificate"] and got["nestings"] == 2

    def test_coherent_word(self, capsys):
        got = run_json(capsys, "check", "--word", "12121")
        assert got["coherent"] is True
        assert all(re.fullmatch(r"-?\d+(/\d+)?", x) for x in got["witness"])

    def test_incoherent_partition(self, capsys):
        got = run_json(capsys, "check", "--partition", "1|1,2|2|1,2|1", "--lambda", "4,3")
        assert got["coherent"] is False and got["certificate"]

    def test_coherent_partition(self, capsys):
        got = run_json(capsys, "check", "--partition", "1|1,2", "--lambda", "2,1")
        assert got["coherent"] is True and got["dimension"] == 1

    @pytest.mark.parametrize("argv", [
        ("check",),
        ("check", "--word", "1a2"),
        ("check", "--word", "112", "--lambda", "1,2"),
        ("check", "--partition", "1,1"),
    ])
    def test_bad_input(self, capsys, argv):
        assert run(capsys, *argv)[0] == 2


class TestVertices:
    def test_counts(self, capsys):
        assert len(run_json(capsys, "vertices", "--lambda", "1,1")) == 2
        assert len(run_json(capsys, "vertices", "--lambda", "2,1")) == 3
        rows = run_json(capsys, "vertices", "--lambda", "2,2,2")
        assert len(rows) == 30
        assert {"word": "1,1,2,2,3,3", "I": ["5/3", "1", "1/3", "11/2"]} in rows

    def test_cap_exit(self, capsys):
        assert run(capsys, "vertices", "--lambda", "5,5,5")[0] == 3
        assert run(capsys, "vertices", "--lambda", "2,2", "--cap", "3")[0] == 3

    def test_env_cap(self, capsys, monkeypatch):
        monkeypatch.setenv("MONOPATH_CAP", "3")
        assert run(capsys, "enumerate", "--lambda", "2,2")[0] == 3

    def test_bad_cap(self, capsys):
        assert run(capsys, "vertices", "--lambda", "2,2", "--cap", "0")[0] == 2

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "vertices", "--lambda", "2,1", "--format", "csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "word,I" and len(lines) == 4

    def test_deterministic(self, capsys):
        first = run(capsys, "vertices", "--lambda", "3,2,1")[1]
        assert run(capsys, "vertices", "--lambda", "3,2,1")[1] == first


class TestOtherCommands:
    def test_enumerate(self, capsys):
        rows = run_json(capsys, "enumerate", "--lambda", "2,2")
        assert len(rows) == 6 and sum(r["non_nesting"] for r in rows) == 4

    def test_incoherency(self, capsys):
        assert run_json(capsys, "incoherency", "--word", "123321")["incoherency"] == 3
        got = run_json(capsys, "incoherency", "--lambda", "2,2,2")
        assert got["maximum"] == 3 and "1,2,3,3,2,1" in got["attainers"]

    def test_coset(self, capsys):
        got = run_json(capsys, "coset", "--word", "112")
        assert got == {"representative": [1, 3], "modulus": 4, "canonical": [0, 2]}
        assert run_json(capsys, "coset", "--lambda", "2,2,2")["bijection"] is True
        assert run(capsys, "coset", "--word", "1221")[0] == 2

    def test_zonotope(self, capsys):
        got = run_json(capsys, "zonotope", "--lambda", "2,2", "--s", "9")
        assert got["s"] == "9" and got["scale"] == "1/4"
        assert len(got["generators"]) == 5
        assert got["generators"][-1]["label"] is None

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "count.json"
        code, out, _ = run(capsys, "count", "--lambda", "2,1", "--out", str(target))
        assert code == 0 and out == ""
        assert json.loads(target.read_text())["coherent"] == 3

    def test_format_mismatch(self, capsys):
        assert run(capsys, "count", "--lambda", "2,1", "--format", "svg")[0] == 2
        assert run(capsys, "count", "--lambda", "2,1", "--format", "csv")[0] == 2
        assert run(capsys, "plot", "--lambda", "2,2,2", "--format", "json")[0] == 2

    def test_unknown_command(self, capsys):
        assert run(capsys, "frobnicate")[0] == 2


class TestVerify:
    @pytest.mark.parametrize("suite", ["counts", "charpoly", "prop51", "atoms", "faces"])
    def test_passes(self, capsys, suite):
        got = run_json(capsys, "verify", suite)
        assert got["passed"] and got["checks"]
        assert all(c["passed"] for c in got["checks"])

    def test_unknown_suite(self, capsys):
        assert run(capsys, "verify", "nope")[0] == 2

    def test_failure_exit(self, capsys, monkeypatch):
        monkeypatch.setitem(verify.SUITES, "broken", lambda: [verify.Check("one", 1, 2)])
        code, out, _ = run(capsys, "verify", "broken")
        assert code == 1
        assert json.loads(out)["checks"] == [{"name": "one", "expected": 1, "actual": 2, "passed": False}]


class TestPlot:
    @pytest.mark.parametrize("lam, lines", [("2,2,2", 9), ("3,2,1", 9), ("1,1,1", 3)])
    def test_line_counts(self, capsys, lam, lines):
        code, out, _ = run(capsys, "plot", "--lambda", lam)
        assert code == 0
        assert out.count("<line ") == lines
        assert out.startswith("<svg") and out.rstrip().endswith("</svg>")

    def test_coordinates_rounded(self):
        svg = plot_slice((2, 2, 2))
        for num in re.findall(r'[xy][12]="([^"]+)"', svg):
            assert len(num.split(".")[-1]) <= 6 if "." in num else True

    def test_braid_lines_through_centre(self):
        # x_i = x_j passes through the origin of the slice, drawn at the canvas centre
        svg = plot_slice((1, 1, 1), size=400)
        for x1, y1, x2, y2 in re.findall(r'x1="([^"]+)" y1="([^"]+)" x2="([^"]+)" y2="([^"]+)"', svg):
            mx, my = (float(x1) + float(x2)) / 2, (float(y1) + float(y2)) / 2
            assert abs(mx - 200) < 1e-4 and abs(my - 200) < 1e-4

    def test_wrong_dimension(self, capsys):
        with pytest.raises(UnsupportedDimension):
            plot_slice((2, 2))
        assert run(capsys, "plot", "--lambda", "2,2")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "monopath", "count", "--lambda", "2,1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["regions"] == 3
