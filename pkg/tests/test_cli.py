import json
import subprocess
import sys
from importlib import resources

import pytest

from eqbrauer.cli import main

DATA = resources.files("eqbrauer") / "data"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_human(capsys):
    code, out, _ = run(capsys, "compute", str(DATA / "catalog" / "3.36.json"))
    assert code == 0
    assert out.splitlines()[0] == "3.36: Z/3"
    assert "3-torsion: Z/3" in out


def test_compute_bertini(capsys):
    code, out, _ = run(capsys, "compute", str(DATA / "catalog" / "1.B.json"))
    assert code == 0 and "(Z/2)^8" in out.splitlines()[0]


def test_compute_json(capsys):
    code, out, _ = run(capsys, "compute", "--json", str(DATA / "catalog" / "2.G44.json"))
    assert code == 0 and json.loads(out)["total"] == [2, 2, 4]


def test_compute_malformed(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"label": 1}', encoding="utf-8")
    code, _, err = run(capsys, "compute", str(bad))
    assert code == 2 and err.startswith("error:")


def test_compute_invalid_case(capsys, tmp_path):
    obj = json.loads((DATA / "catalog" / "3.36.json").read_text(encoding="utf-8"))
    obj["strata"][0]["stabilizer_order"] = 1
    path = tmp_path / "c.json"
    path.write_text(json.dumps(obj), encoding="utf-8")
    code, _, err = run(capsys, "compute", str(path))
    assert code == 2 and "stabilizer" in err


def test_compute_missing_file(capsys, tmp_path):
    assert run(capsys, "compute", str(tmp_path / "nope.json"))[0] == 2


def test_verify_filter(capsys):
    code, out, _ = run(capsys, "verify-catalog", "--filter", "2.G*")
    assert code == 0
    assert out.strip().splitlines()[-1].startswith("14/14 entries match")


def test_verify_empty_filter(capsys):
    code, out, _ = run(capsys, "verify-catalog", "--filter", "zzz*", "--json")
    assert code == 0 and json.loads(out)["summary"]["total"] == 0


def test_verify_json_is_deterministic(capsys):
    args = ("verify-catalog", "--filter", "3.*", "--json", "--no-timing")
    first = run(capsys, *args)[1]
    assert first == run(capsys, *args)[1]


def test_verify_mismatch_exit(capsys, tmp_path):
    obj = json.loads((DATA / "catalog" / "3.36.json").read_text(encoding="utf-8"))
    obj["expected_brauer"] = [2]
    (tmp_path / "catalog").mkdir()
    (tmp_path / "catalog" / "x.json").write_text(json.dumps(obj), encoding="utf-8")
    code, out, err = run(capsys, "verify-catalog", "--catalog", str(tmp_path))
    assert code == 1 and "3.36" in err and "MISMATCH" in out


def test_residue_cubic(capsys):
    code, out, _ = run(capsys, "residue", str(DATA / "scenarios" / "cubic-threefold.json"))
    assert code == 0
    assert out.strip().splitlines()[-1] == "certified: in Br, nonzero"


def test_residue_json(capsys):
    code, out, _ = run(capsys, "residue", "--json", str(DATA / "scenarios" / "unit-symbol.json"))
    data = json.loads(out)
    assert code == 0 and all(d["residue"] == "Trivial" for d in data["divisors"])


def test_residue_ramified(capsys):
    code, out, _ = run(capsys, "residue", str(DATA / "scenarios" / "ramified-symbol.json"))
    assert code == 1 and "fails at L" in out


def test_residue_unknown_needs_flag(capsys, tmp_path):
    obj = {
        "name": "opaque",
        "models": {"m": {"variables": ["x", "y"], "a": "x^2 - y^3", "b": "y"}},
        "divisors": [{"name": "N", "stabilizer_order": 1, "generator": "x^2 - y^3", "main_variable": "x"}],
    }
    path = tmp_path / "s.json"
    path.write_text(json.dumps(obj), encoding="utf-8")
    code, _, err = run(capsys, "residue", str(path))
    assert code == 1 and "uncertified" in err
    # allowed, the Unknown no longer fails the run, but the summary stays honest
    code, out, _ = run(capsys, "residue", "--allow-unknown", str(path))
    assert code == 0 and "not certified in Br" in out


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["--orders", "2,2,2,2", "--am", "1000e;0100e"], "(Z/2)^4"),
        (["--orders", "2,2,2,2", "--am", "100000;010000"], "(Z/2)^4"),
        (["--orders", "2,2,2,2", "--am", "1,0,0,0,0,0;0,1,0,0,0,0"], "(Z/2)^4"),
        (["--orders", "7"], "0"),
        (["--orders", "3,3,3"], "(Z/3)^3"),
        (["--orders", "2,4", "--am", "1"], "0"),
    ],
)
def test_schur(capsys, argv, expected):
    code, out, _ = run(capsys, "schur", *argv)
    assert code == 0 and out.strip() == expected


def test_schur_bad_input(capsys):
    assert run(capsys, "schur", "--orders", "2,x")[0] == 2
    assert run(capsys, "schur", "--orders", "2,2,2", "--am", "10")[0] == 2


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "eqbrauer", "schur", "--orders", "2,2,2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "(Z/2)^3"
