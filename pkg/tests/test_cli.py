import io
import json
import shutil
import subprocess
import sys
from pathlib import Path

import pytest

from youngcalc.cli import run

DATA = Path(__file__).resolve().parents[1] / "demos" / "data"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv)
    assert code == 0, err
    return json.loads(out)


def test_functional():
    assert call_json("functional", "--partition", "4,3,1", "--k", "4")["value"] == "64/1"
    data = call_json("functional", "--profile", str(DATA / "triangle.json"), "--k", "2")
    assert data["value"] == "2/1"


def test_embed_count_and_volume():
    assert call_json("embed", "--graph", str(DATA / "star_black2.json"),
                     "--partition", "4,3,1")["count"] == "26"
    data = call_json("embed", "--graph", str(DATA / "star_black2.json"),
                     "--profile", str(DATA / "triangle.json"))
    assert data["volume"] == "8/3"


def test_inline_json_graph():
    assert call_json("embed", "--graph", '{"white":1,"black":1,"edges":[[0,0]]}',
                     "--partition", "4,3,1")["count"] == "8"


def test_check_poly():
    data = call_json("check-poly", "--sum", str(DATA / "star_diff.json"))
    assert data["verdict"] == "pass" and data["residuals"] == {}
    data = call_json("check-poly", "--sum", str(DATA / "star_black2.json"))
    assert data["verdict"] == "fail"
    (term,) = data["residuals"]["1"]["terms"]
    assert term["coeff"] == "2/1" and term["decorated"] == [0, 0]


def test_decompose():
    data = call_json("decompose", "--sum", str(DATA / "star_diff.json"))
    assert data["s_polynomial"] == {"terms": [{"gens": [3], "coeff": "1/1"}]}
    assert data["criterion"]["verdict"] == "pass"
    assert data["identity_check"]["holds"] is True
    assert data["test_residuals"] == []
    data = call_json("decompose", "--sum", str(DATA / "star_black2.json"))
    assert data["feasible"] is False and data["test_residuals"]


def test_character():
    data = call_json("character", "--mu", "2", "--lambda", "3,1", "--method", "both")
    assert data["value"] == data["oracle"] == "4/1" and data["agree"] is True
    assert data["calibration"] == "-1"
    data = call_json("character", "--mu", "1", "--lambda", "2,1", "--alpha", "2")
    assert data["raw_sum"] == "-6/1"
    assert call_json("character", "--mu", "2,1", "--lambda", "3,2,1",
                     "--method", "mn")["value"] == "0/1"


def test_maps_list():
    data = call_json("maps", "--mu", "2", "--list")
    assert data["maps_enumerated"] == 3 and len(data["maps"]) == 3
    assert {m["euler_characteristic"] for m in data["maps"]} == {1, 2}


def test_conjecture_scan_and_bound():
    data = call_json("conjecture-scan", "--max-edges", "3")
    assert data["counterexamples"] == [] and data["bound"] == 4
    code, out, err = call("conjecture-scan", "--max-edges", "6")
    assert code == 3 and out == ""
    code, _, _ = call("maps", "--mu", "4,3")
    assert code == 3


def test_mc_reproducible():
    args = ("mc", "--graph", str(DATA / "single_edge.json"), "--partition", "4,3,1",
            "--samples", "50000", "--seed", "9")
    a = call(*args)
    b = call(*args)
    c = call("--threads", "3", *args)
    assert a[0] == 0 and a[1] == b[1]
    ja, jc = json.loads(a[1]), json.loads(c[1])
    assert ja["estimate"] == jc["estimate"] and ja["seed"] == 9


@pytest.mark.parametrize("argv", [
    ["functional", "--partition", "1,3", "--k", "2"],
    ["functional", "--partition", "2", "--k", "1"],
    ["embed", "--graph", "/nonexistent.json", "--partition", "1"],
    ["embed", "--graph", '{"white": 2, "black": 1, "edges": [[0, 0]]}', "--partition", "1"],
    ["check-poly", "--sum", "{not json"],
    ["functional", "--profile", '{"breakpoints": [["1/0", "1/1"]]}', "--k", "2"],
    ["character", "--mu", "2", "--lambda", "2", "--alpha", "2", "--method", "mn"],
    ["frobnicate"],
    ["functional", "--partition", "1", "--k", "2", "--bogus"],
])
def test_malformed_input_exit_2(argv):
    code, out, err = call(*argv)
    assert code == 2
    assert out == ""
    assert err


def test_output_is_sorted_json():
    code, out, _ = call("functional", "--partition", "2,1", "--k", "3")
    assert out == json.dumps(json.loads(out), sort_keys=True) + "\n"


def test_module_entry_point():
    exe = shutil.which("youngcalc")
    cmd = [exe] if exe else [sys.executable, "-m", "youngcalc"]
    res = subprocess.run(cmd + ["functional", "--partition", "4,3,1", "--k", "4"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert json.loads(res.stdout)["value"] == "64/1"
