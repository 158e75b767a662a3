import json
from importlib import resources

import pytest

from eqbrauer.abelian import AbelianGroup
from eqbrauer.catalog import load_catalog, select, verify, verify_entry
from eqbrauer.scenario import ScenarioFormatError, parse_scenario
from eqbrauer.strata import CaseFormatError

SCENARIOS = resources.files("eqbrauer") / "data" / "scenarios"


@pytest.fixture(scope="module")
def entries():
    return load_catalog()


def test_labels_unique_and_sorted(entries):
    labels = [e.label for e in entries]
    assert labels == sorted(labels) and len(set(labels)) == len(labels)


def test_kinds(entries):
    kinds = {e.kind for e in entries}
    assert kinds == {"stratification", "amitsur", "symbol-scenario"}


def test_filter(entries):
    assert len(select(entries, "2.G*")) == 14
    assert select(entries, "nothing-matches-*") == []
    assert [e.label for e in select(entries, "3.36")] == ["3.36"]


def test_empty_report_is_ok():
    report = verify([])
    assert report.ok and report.summary()["total"] == 0


def test_mismatch_detected(entries, tmp_path):
    src = next(e for e in entries if e.label == "3.36")
    obj = json.loads((resources.files("eqbrauer") / "data" / "catalog" / "3.36.json").read_text(encoding="utf-8"))
    obj["expected_brauer"] = [9]
    (tmp_path / "catalog").mkdir()
    (tmp_path / "catalog" / "x.json").write_text(json.dumps(obj), encoding="utf-8")
    (entry,) = load_catalog(tmp_path)
    result = verify_entry(entry)
    assert not result.match and result.oracle == "agree"
    assert src.expected == AbelianGroup((3,))


def test_duplicate_labels_rejected(tmp_path):
    text = (resources.files("eqbrauer") / "data" / "catalog" / "3.36.json").read_text(encoding="utf-8")
    (tmp_path / "catalog").mkdir()
    for name in ("a.json", "b.json"):
        (tmp_path / "catalog" / name).write_text(text, encoding="utf-8")
    with pytest.raises(CaseFormatError, match="duplicate"):
        load_catalog(tmp_path)


def test_entries_need_expectations(tmp_path):
    obj = json.loads((resources.files("eqbrauer") / "data" / "catalog" / "3.36.json").read_text(encoding="utf-8"))
    del obj["expected_brauer"]
    (tmp_path / "catalog").mkdir()
    (tmp_path / "catalog" / "x.json").write_text(json.dumps(obj), encoding="utf-8")
    with pytest.raises(CaseFormatError):
        load_catalog(tmp_path)


def test_oracle_cap_skips(entries):
    entry = next(e for e in entries if e.label == "3.36")
    assert verify_entry(entry, oracle_cap=10).oracle.startswith("skipped")


class TestScenarioFiles:
    def test_unit_symbol(self):
        sc = parse_scenario((SCENARIOS / "unit-symbol.json").read_text(encoding="utf-8"))
        report = sc.run()
        assert all(d.residue.value == "Trivial" for d in report.divisors)
        assert report.in_br and not report.nonzero

    def test_ramified_symbol(self):
        sc = parse_scenario((SCENARIOS / "ramified-symbol.json").read_text(encoding="utf-8"))
        report = sc.run()
        assert not report.in_br
        assert report.failing == ["L"]

    def test_unknown_field(self):
        obj = json.loads((SCENARIOS / "unit-symbol.json").read_text(encoding="utf-8"))
        obj["extra"] = 1
        with pytest.raises(ScenarioFormatError, match="unknown"):
            parse_scenario(json.dumps(obj))

    def test_unknown_strategy(self):
        obj = json.loads((SCENARIOS / "unit-symbol.json").read_text(encoding="utf-8"))
        obj["divisors"][0]["strategy"] = {"kind": "magic"}
        with pytest.raises(ScenarioFormatError, match="magic"):
            parse_scenario(json.dumps(obj))

    def test_bad_expression(self):
        obj = json.loads((SCENARIOS / "unit-symbol.json").read_text(encoding="utf-8"))
        obj["divisors"][0]["generator"] = "y1 +"
        with pytest.raises(ScenarioFormatError):
            parse_scenario(json.dumps(obj))
