import json
import subprocess
import sys

import pytest

from kleincurves.cli import main


def _write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj) if not isinstance(obj, str) else obj)
    return str(path)


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


MONO_2335 = {"ambientDim": 3, "coords": [["1"], ["0", "0", "1"], ["0", "0", "0", "1"], ["0", "0", "0", "0", "0", "1"]]}


def test_analyze_json(tmp_path, capsys):
    path = _write(tmp_path, "f.json", MONO_2335)
    code, out, _ = _run(capsys, "analyze", path, "--json", "--place", "0", "--place", "inf", "--place", "[2, 0, 1]")
    assert code == 0
    rep = json.loads(out)
    assert rep["degree"] == 5
    assert rep["plucker"]["lhs"] == rep["plucker"]["rhs"] == 8


def test_analyze_several_files_in_parallel(tmp_path, capsys):
    paths = [_write(tmp_path, f"f{k}.json", MONO_2335) for k in range(3)]
    code, out, _ = _run(capsys, "analyze", *paths, "--jobs", "3", "--json")
    assert code == 0
    assert len(json.loads(out)) == 3


def test_contact_recovers_beta(tmp_path, capsys):
    path = _write(tmp_path, "f.json", MONO_2335)
    code, out, _ = _run(capsys, "contact", path, "--json")
    assert code == 0
    assert json.loads(out) == {"contact": True, "beta": ["0", "0", "1", "-5", "0", "0"]}


def test_contact_with_given_beta(tmp_path, capsys):
    path = _write(tmp_path, "f.json", MONO_2335)
    code, out, _ = _run(capsys, "contact", path, "--beta", "0", "0", "1", "1", "0", "0", "--json")
    assert code == 0
    assert json.loads(out)["contact"] is False


def test_klein_roundtrip_w_model(tmp_path, capsys):
    path = _write(tmp_path, "f.json", MONO_2335)
    code, out, _ = _run(capsys, "klein", path, "--json")
    assert code == 0
    img = json.loads(out)
    assert img["degree"] == 6
    assert all(v == "0" for v in img["nullChecks"].values())
    back = _write(tmp_path, "g.json", img)
    code, out, _ = _run(capsys, "klein-inv", back, "--json")
    assert code == 0
    assert json.loads(out)["document"]["coords"] == MONO_2335["coords"]


def test_klein_standard_quadric_roundtrip_degree(tmp_path, capsys):
    path = _write(tmp_path, "f.json", MONO_2335)
    code, out, _ = _run(capsys, "klein", path, "--model", "standardQuadric", "--json")
    assert code == 0
    img = json.loads(out)
    assert img["document"]["model"] == "standardQuadric"
    back = _write(tmp_path, "g.json", img)
    code, out, _ = _run(capsys, "klein-inv", back, "--json")
    assert code == 0
    assert json.loads(out)["degree"] == 5


def test_null_complete(tmp_path, capsys):
    doc = {"gamma": [{"num": ["1"], "den": ["0", "1"]}, {"num": ["i"], "den": ["0", "1"]}, ["0"]]}
    path = _write(tmp_path, "gamma.json", doc)
    code, out, _ = _run(capsys, "null-complete", path, "--json")
    assert code == 0
    # one simple pole
    assert json.loads(out)["degree"] == 1


def test_null_complete_rejects_non_null(tmp_path, capsys):
    path = _write(tmp_path, "gamma.json", {"gamma": [["0", "1"], ["0", "1"], ["0", "1"]]})
    code, _, err = _run(capsys, "null-complete", path)
    assert code == 2
    assert "NotNull" in err


def test_verify_and_profiles(capsys):
    code, out, _ = _run(capsys, "verify", "all", "--json")
    assert code == 0
    assert all(r["passed"] for r in json.loads(out))
    code, out, _ = _run(capsys, "profiles", "7", "--json")
    assert code == 0
    sols = json.loads(out)["solutions"]
    assert [(s["r1"], s["r2"]) for s in sols] == [(1, 2), (3, 0)]


@pytest.mark.parametrize("doc,fragment", [
    ('{"coords": [["1"], ["1/0"]]}', "coords[1][0]"),
    ('{"coords": [["1"], [0.5]]}', "coords[1][0]"),
    ('{"coords": []}', "coords"),
    ('{"coords": [["1"], ["0", "1"]], "ambientDim": 3}', "ambientDim"),
    ("{not json", "invalid JSON"),
])
def test_malformed_input(tmp_path, capsys, doc, fragment):
    path = _write(tmp_path, "bad.json", doc)
    code, _, err = _run(capsys, "analyze", path)
    assert code == 2
    assert fragment in err


def test_precondition_failures_exit_2(tmp_path, capsys):
    not_contact = {"coords": [["1"], ["0", "1"], ["0", "0", "1"], ["0", "0", "0", "0", "1"]]}
    path = _write(tmp_path, "f.json", not_contact)
    code, _, err = _run(capsys, "klein", path)
    assert code == 2
    assert "NotContact" in err


def test_usage_errors(capsys):
    assert main(["verify", "deg99"]) == 2
    assert main(["profiles", "1"]) == 2
    assert main([]) == 2
    capsys.readouterr()


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "kleincurves", "profiles", "6"], capture_output=True, text=True)
    assert res.returncode == 0
    assert "(r1, r2) = (0, 2)" in res.stdout
