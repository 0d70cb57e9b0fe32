import io
import json
import subprocess
import sys
from importlib import resources

import pytest

from upsemigroups.cli import Report, main
from upsemigroups.core import ClassLabel, sorted_labels
from upsemigroups.powerset import OpKind, Universe, classify_combo

EXAMPLE = str(resources.files("upsemigroups").joinpath("data/example.alg"))


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*argv, "--json")
    return code, json.loads(text)


@pytest.fixture
def write(tmp_path):
    def _write(text, name="alg.txt"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return _write


class TestCheck:
    def test_example(self):
        code, text = run("check", EXAMPLE)
        assert code == 0
        assert "up-axioms: ok" in text and "associativity: ok" in text

    def test_violation(self, write):
        path = write("order: 2\nzero: 0\ndot:\n0 1\n0 1\n")
        code, text = run("check", path)
        assert code == 1
        assert "UP-1 violated at (0, 0, 1): 1 != 0" in text

    def test_non_associative_star(self, write):
        path = write("order: 2\nzero: 0\ndot:\n0 1\n0 0\nstar:\n1 0\n0 0\n")
        code, rep = run_json("check", path)
        assert code == 1
        assert rep["checks"]["associativity"]["witnesses"][0]["elements"] == [0, 0, 1]

    def test_unparsable(self, write):
        assert run("check", write("order: banana\n"))[0] == 2

    def test_missing_file(self, tmp_path):
        assert run("check", str(tmp_path / "nope"))[0] == 2


class TestClassify:
    def test_example(self):
        code, rep = run_json("classify", EXAMPLE)
        assert code == 0
        assert "f" in rep["labels"]
        assert rep["labels"] == ["l", "r", "f"]
        assert rep["profile"] == {"dl": False, "dr": False, "sl": True, "sr": True}

    def test_text_output(self):
        code, text = run("classify", EXAMPLE)
        assert code == 0
        assert "profile: dl=F dr=F sl=T sr=T" in text
        assert "labels: l r f" in text

    def test_trivial(self, write):
        code, rep = run_json("classify", write("order: 1\nzero: 0\ndot:\n0\nstar:\n0\n"))
        assert code == 0 and rep["labels"] == [l.value for l in ClassLabel]

    def test_missing_star(self, write):
        code, rep = run_json("classify", write("order: 1\nzero: 0\ndot:\n0\n"))
        assert code == 2 and rep["verdict"] == "error"

    def test_invalid_algebra(self, write):
        code, rep = run_json("classify", write("order: 2\nzero: 0\ndot:\n0 1\n0 1\nstar:\n0 0\n0 0\n"))
        assert code == 1 and rep["labels"] is None


class TestEnumerate:
    def test_order1(self):
        code, rep = run_json("enumerate", "--order", "1")
        assert code == 0
        c = rep["counts"]
        assert c["count_up_algebras"] == 1 and c["count_pairs"] == 1
        assert set(c["label_counts"].values()) == {1}

    def test_order3_ff(self):
        code, rep = run_json("enumerate", "--order", "3", "--class", "ff")
        assert code == 0 and rep["counts"]["matching_pairs"] == 0

    def test_order3_counts(self):
        code, rep = run_json("enumerate", "--order", "3")
        assert rep["counts"]["label_counts"]["f"] == 28
        assert rep["structures"] is None

    def test_limit_lists_structures(self):
        code, rep = run_json("enumerate", "--order", "3", "--class", "lf", "--limit", "2", "--up-to-iso")
        assert len(rep["structures"]) == 2
        assert all("lf" in s["labels"] for s in rep["structures"])

    def test_algebras_only(self):
        code, text = run("enumerate", "--order", "3", "--limit", "10", "--algebras-only")
        assert code == 0 and text.count("dot:") == 5

    @pytest.mark.parametrize("order", ["0", "6"])
    def test_order_out_of_range(self, order):
        assert run("enumerate", "--order", order)[0] == 2

    def test_bad_class(self):
        assert run("enumerate", "--order", "2", "--class", "zz")[0] == 2

    def test_deterministic(self):
        a = run_json("enumerate", "--order", "3", "--up-to-iso")[1]
        b = run_json("enumerate", "--order", "3", "--up-to-iso")[1]
        a.pop("timing_s"), b.pop("timing_s")
        assert a == b


class TestPowerset:
    @pytest.mark.parametrize("m", ["0", "3"])
    def test_verify_identities(self, m):
        code, rep = run_json("powerset", "--universe", m, "--verify-identities")
        assert code == 0
        assert rep["counts"]["identities_passed"] == rep["counts"]["identities_total"] == 30

    def test_classify_boxtimes(self):
        code, rep = run_json("powerset", "--universe", "2", "--classify", "--type", "2", "--kind", "boxtimes")
        assert code == 0
        assert {"r", "lr", "rr", "fr"} <= set(rep["labels"])

    def test_classify_needs_type(self):
        assert run("powerset", "--universe", "2", "--classify")[0] == 2

    @pytest.mark.parametrize("argv", [
        ["--universe", "5", "--verify-identities"],
        ["--universe", "2", "--classify", "--type", "3", "--kind", "cap"],
        ["--universe", "2", "--classify", "--type", "1", "--kind", "dot"],
        ["--universe", "2"],
        ["--universe", "2", "--verify-identities", "--classify"],
    ])
    def test_usage_errors(self, argv):
        assert run("powerset", *argv)[0] == 2

    @pytest.mark.parametrize("up_type", [1, 2])
    @pytest.mark.parametrize("kind", ["odot", "otimes", "boxdot", "boxtimes", "cap", "cup"])
    def test_export_then_classify_round_trip(self, tmp_path, up_type, kind):
        path = tmp_path / "combo.alg"
        code, _ = run("powerset", "--universe", "3", "--export", str(path),
                      "--type", str(up_type), "--kind", kind)
        assert code == 0
        code, rep = run_json("classify", str(path))
        assert code == 0
        expected = classify_combo(Universe(3), up_type, OpKind(kind))
        assert rep["labels"] == [l.value for l in sorted_labels(expected)]

    def test_export_boxdot_labels(self, tmp_path):
        path = tmp_path / "boxdot.alg"
        run("powerset", "--universe", "3", "--export", str(path), "--type", "1", "--kind", "boxdot")
        code, rep = run_json("classify", str(path))
        assert {"l", "ll", "rl", "fl"} <= set(rep["labels"])


@pytest.mark.parametrize("argv", [
    ["check", EXAMPLE],
    ["classify", EXAMPLE],
    ["enumerate", "--order", "2", "--limit", "3"],
    ["powerset", "--universe", "1", "--verify-identities"],
])
def test_json_report_round_trips(argv):
    _, rep = run_json(*argv)
    assert Report.from_dict(rep).to_dict() == rep
    assert set(rep) == {"command", "verdict", "checks", "profile", "labels",
                        "counts", "structures", "error", "timing_s"}


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "upsemigroups", "classify", EXAMPLE],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "labels: l r f" in proc.stdout


def test_help_exits_zero():
    assert run("--help")[0] == 0
