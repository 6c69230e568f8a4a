import csv
import io
import json

import pytest

from singforge import __version__
from singforge.cli import main
from singforge.serialize import dumps


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


HOPF = {"terms": [[2, 0, 0, 0, 1, 0], [0, 0, 2, 0, -1, 0]]}
PAIR = {
    "braids": [{"coeffs": [{"freqs": [[2, -1, 0]]}, 0, 1]}, {"coeffs": [{"freqs": [[4, -1, 0]]}, 1]}],
    "o_mults": [0, 2],
    "coefficients": [{"freqs": [[4, -1, 0]]}, 1],
}


def test_version(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0
    assert __version__ in capsys.readouterr().out


def test_forge_hopf(capsys):
    code, out, _ = run(capsys, "forge", "--word", "s=2: s1 s1", "--k", "1")
    assert code == 0
    obj = json.loads(out)
    terms = {tuple(t[:4]): complex(t[4], t[5]) for t in obj["poly"]["terms"]}
    assert set(terms) == {(2, 0, 0, 0), (0, 0, 2, 0)}
    assert abs(terms[(2, 0, 0, 0)] - 1) < 1e-12 and abs(terms[(0, 0, 2, 0)] + 1) < 1e-12
    assert obj["certificates"]["weak"]["pass"] and obj["certificates"]["strong"]["pass"]
    assert obj["g_margin"] >= 1.9 and obj["arg_margin"] >= 1.9


def test_forge_half_twist_picks_minimal_weight(capsys):
    code, out, _ = run(capsys, "forge", "--word", "s=2: s1", "--weak-only")
    assert code == 0
    obj = json.loads(out)
    assert obj["weight"] == [1, 2]
    assert obj["symmetry_used"] == "k2"


def test_forge_rejects_asymmetric_braid(capsys):
    code, _, err = run(capsys, "forge", "--word", "s=3: s1 s2")
    assert code == 2
    assert "neither" in err


def test_forge_bad_word(capsys):
    code, _, _ = run(capsys, "forge", "--word", "s=2: s5")
    assert code == 1


def test_certify(capsys, tmp_path):
    path = write(tmp_path, "hopf.json", HOPF)
    code, out, _ = run(capsys, "certify", path, "--strong")
    assert code == 0
    assert json.loads(out)["pass"] is True
    bad = write(tmp_path, "bad.json", {"terms": [[2, 0, 0, 0, 1, 0], [0, 0, 2, 2, -1, 0]]})
    code, out, _ = run(capsys, "certify", bad, "--strong")
    assert code == 4
    assert json.loads(out)["pass"] is False


def test_certify_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "certify", str(tmp_path / "nope.json"))
    assert code == 1 and "cannot read" in err


def test_compat(capsys, tmp_path):
    path = write(tmp_path, "seq.json", PAIR)
    code, out, _ = run(capsys, "compat", path)
    assert code == 0
    obj = json.loads(out)
    assert obj["compatible"] and obj["pass"]
    assert obj["report"]["compatible"]


def test_compat_empty(capsys, tmp_path):
    path = write(tmp_path, "seq.json", {"braids": [], "o_mults": [], "coefficients": []})
    code, _, _ = run(capsys, "compat", path)
    assert code == 1


def test_compat_ladder_failure(capsys, tmp_path):
    seq = dict(PAIR, coefficients=[1, 1])
    code, out, _ = run(capsys, "compat", write(tmp_path, "seq.json", seq))
    assert code == 4
    assert "FAIL a_{i-1}" in out


def test_obstruct(capsys):
    code, out, _ = run(capsys, "obstruct", "1", "-4", "8", "-9", "8", "-4", "1")
    assert code == 0
    assert json.loads(out)["verdict"] == "excluded"


def test_obstruct_bad_input(capsys):
    code, _, _ = run(capsys, "obstruct", "1", "x")
    assert code == 1


def test_newton(capsys, tmp_path):
    f = {"terms": [[3, 0, 0, 0, 1, 0], [1, 0, 2, 0, 1, 0], [0, 0, 5, 0, 1, 0]]}
    code, out, _ = run(capsys, "newton", write(tmp_path, "f.json", f))
    assert code == 0
    obj = json.loads(out)
    assert [list(v) for v in obj["vertices"]] == [[0, 5], [1, 2], [3, 0]]


def test_newton_constant_term(capsys, tmp_path):
    f = {"terms": [[0, 0, 0, 0, 1, 0], [1, 0, 0, 0, 1, 0]]}
    code, _, _ = run(capsys, "newton", write(tmp_path, "f.json", f))
    assert code == 1


def test_plotdata(capsys, tmp_path):
    loop = {"coeffs": [{"freqs": [[2, -1, 0]]}, 0, 1]}
    out_path = tmp_path / "roots.csv"
    code, _, _ = run(capsys, "plotdata", write(tmp_path, "g.json", loop), "--samples", "8", "-o", str(out_path))
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out_path.read_text())))
    # the closed loop repeats t = 2 pi
    assert len(rows) == 2 * 9
    assert {"t", "root_index", "re", "im", "circle_radius", "circle_index"} <= set(rows[0])
    assert all(abs(float(r["circle_radius"]) - 1) < 1e-9 for r in rows)


def test_symmetry(capsys):
    code, out, _ = run(capsys, "symmetry", "--word", "s=2: s1 s1")
    assert code == 0
    assert "u_even" in json.loads(out)["tags"]


def test_set_and_grid_overrides(capsys, tmp_path):
    path = write(tmp_path, "hopf.json", HOPF)
    code, _, _ = run(capsys, "--grid", "512", "certify", path)
    assert code == 0
    code, _, err = run(capsys, "--set", "no_such_key=1", "certify", path)
    assert code == 1 and "unknown" in err


def test_canonical_json_is_stable():
    obj = {"b": [1.0, float("inf")], "a": 0.1, "c": 1 + 2j}
    text = dumps(obj)
    assert text == '{"a": 0.10000000000000001, "b": [1.0, "inf"], "c": [1.0, 2.0]}\n'
    assert dumps(json.loads(text)) == text
