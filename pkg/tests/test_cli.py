import json
import subprocess
import sys

import pytest

from fourqubit.cli import main

W = "1|0001>+1|0010>+1|0100>+1|1000>"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    return code, json.loads(out) if out else None


def test_invariants_of_W(capsys):
    code, rep = run_json(capsys, "invariants", W)
    assert code == 0
    assert set(rep["invariants"].values()) == {"0"}
    assert len(rep["invariants"]) == 10
    assert rep["input"] == W


def test_rank_of_ghz(capsys):
    code, rep = run_json(capsys, "rank", "1|0000> + 1|1111>")
    assert code == 0
    assert rep["rank"] == 2
    assert rep["description"].endswith("return 2")


def test_normal_form_family1(capsys):
    code, rep = run_json(capsys, "normal-form", "--family", "1", "--params", "1,2,3,4")
    assert code == 0
    assert rep["amplitudes"] == {
        "0000": "5/2", "1111": "5/2", "0011": "-3/2", "1100": "-3/2",
        "0101": "5/2", "1010": "5/2", "0110": "-1/2", "1001": "-1/2"}


def test_text_output(capsys):
    code, out, _ = run(capsys, "rank", "1|0000> + 1|1111>")
    assert code == 0
    assert "rank: 2" in out


def test_classify(capsys):
    code, rep = run_json(capsys, "classify", W)
    assert code == 0
    assert rep["family"] == 6 and rep["family_group"] == [6]
    assert rep["nilpotent"] is True
    assert rep["jordan_profile"]["zero_blocks"] == [3, 3, 1, 1]


def test_equiv_exit_codes(capsys):
    code, rep = run_json(capsys, "equiv", "|0000> + |1111>", W)
    assert code == 3 and rep["equivalent"] == "no"
    code, rep = run_json(capsys, "equiv", W, "|1110> + |1101> + |1011> + |0111>")
    assert code == 0 and rep["equivalent"] == "yes"


def test_input_errors(capsys, tmp_path):
    code, _, err = run(capsys, "invariants", "1|0000> - 1|0000>")
    assert code == 1 and "zero state" in err
    code, _, err = run(capsys, "rank", "--input", str(tmp_path / "missing.json"))
    assert code == 1 and "cannot read" in err
    code, _, _ = run(capsys, "invariants", "|000>")
    assert code == 1
    code, _, _ = run(capsys, "equiv", W)
    assert code == 1
    code, _, _ = run(capsys, "normal-form", "--family", "1", "--params", "1,2")
    assert code == 1
    code, _, _ = run(capsys, "weyl", "--point", "1,2,3")
    assert code == 1
    code, _, _ = run(capsys, "weyl", "--point", "1,2,3,4", "--apply", "spin")
    assert code == 1
    code, _, _ = run(capsys, "orbit-label", "1,2;3")
    assert code == 1


def test_batch_input_and_output_file(capsys, tmp_path):
    states = [{"qubits": 4, "amplitudes": {"0000": "1", "1111": "1"}}, W, "|0000>"]
    src = tmp_path / "states.json"
    src.write_text(json.dumps(states))
    dst = tmp_path / "out.json"
    code, out, _ = run(capsys, "rank", "--input", str(src), "--format", "json", "--output", str(dst))
    assert code == 0 and out == ""
    reps = json.loads(dst.read_text())
    assert [r["rank"] for r in reps] == [2, 4, 1]
    assert reps[0]["input"] == states[0]


def test_batch_jobs_preserve_order(capsys, tmp_path):
    states = [W, "|0000> + |1111>", "|0000>", "|0000> + |0011> + |1111>"]
    src = tmp_path / "states.json"
    src.write_text(json.dumps(states))
    _, serial = run_json(capsys, "rank", "--input", str(src))
    _, parallel = run_json(capsys, "rank", "--input", str(src), "--jobs", "2")
    assert serial == parallel
    assert [r["rank"] for r in serial] == [4, 2, 1, 3]


def test_ket_text_file(capsys, tmp_path):
    src = tmp_path / "w.txt"
    src.write_text(W + "\n")
    code, rep = run_json(capsys, "invariants", "--input", str(src))
    assert code == 0 and rep["input"] == W


def test_orbit_label(capsys):
    code, rep = run_json(capsys, "orbit-label", "0,1+i,0;1+i,0,1-i;0,1-i,0")
    assert code == 0 and rep["label"] == "{tall(1), wide(1)}"
    matrix = json.dumps({"rows": 2, "cols": 2, "entries": [["i", "1"], ["1", "-i"]]})
    code, rep = run_json(capsys, "orbit-label", matrix)
    assert code == 0 and rep["label"] == "{sym(2, 0)}"


def test_weyl(capsys):
    code, rep = run_json(capsys, "weyl", "--point", "1,0,0,0", "--apply", "reflect")
    assert code == 0
    assert rep["invariants"] == {"H": "1/2", "Gamma": "1/32", "Sigma": "1/128", "Pi": "-1/2048"}
    assert rep["relations"]["I2"] == "6"
    assert rep["image"] == ["1/2", "1/2", "1/2", "1/2"]
    assert rep["invariants_preserved"] is True


def test_json_output_is_byte_stable():
    cmd = [sys.executable, "-m", "fourqubit", "classify", "--format", "json", "--seed", "7",
           "|0000> + |0011> + |1110>"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a


def test_selftest_quick(capsys):
    code, rep = run_json(capsys, "selftest", "--quick", "--seed", "3")
    assert code == 0 and rep["all_passed"]
    assert [c["number"] for c in rep["criteria"]] == list(range(1, 11))
