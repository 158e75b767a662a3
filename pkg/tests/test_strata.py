import json

import pytest
from hypothesis import given, settings

from eqbrauer.catalog import load_catalog
from eqbrauer.strata import (
    CaseFormatError,
    InconsistentRamification,
    case_to_dict,
    load_case,
    parse_case,
    render_case,
    rh_quotient_genus,
    validate_case,
)

from strategies import small_cases

BASE = {
    "label": "t",
    "group": {"name": "C6", "cyclic_orders": [6]},
    "strata": [
        {"id": "a", "stabilizer_order": 2, "quotient_genus": 0},
        {"id": "b", "stabilizer_order": 3, "quotient_genus": 1, "genus": 2},
    ],
    "points": [{"id": "p", "incidences": [{"stratum": "a", "multiplicity": 1}, {"stratum": "b", "multiplicity": 1}]}],
    "standard_form": True,
}


def case_with(**changes):
    obj = json.loads(json.dumps(BASE))
    obj.update(changes)
    return obj


@pytest.fixture(scope="module")
def catalog():
    return {e.label: e for e in load_catalog()}


class TestSchema:
    def test_round_trip(self):
        case = parse_case(json.dumps(BASE))
        assert parse_case(render_case(case)) == case

    @settings(max_examples=100, deadline=None)
    @given(small_cases())
    def test_round_trip_random(self, case):
        assert parse_case(render_case(case)) == case

    def test_unknown_field_rejected(self):
        with pytest.raises(CaseFormatError, match="unknown"):
            parse_case(json.dumps(case_with(colour="red")))

    def test_missing_field_rejected(self):
        obj = case_with()
        del obj["points"]
        with pytest.raises(CaseFormatError, match="missing"):
            parse_case(json.dumps(obj))

    def test_bad_json(self):
        with pytest.raises(CaseFormatError):
            parse_case("{not json")

    def test_load_from_disk(self, tmp_path):
        path = tmp_path / "c.json"
        path.write_text(json.dumps(BASE), encoding="utf-8")
        assert load_case(path).label == "t"

    def test_dict_keeps_optional_fields(self):
        d = case_to_dict(parse_case(json.dumps(BASE)))
        assert d["strata"][1]["genus"] == 2
        assert "genus" not in d["strata"][0]


class TestValidation:
    def test_shipped_case_valid(self, catalog):
        assert validate_case(catalog["3.36"].payload) == []

    def test_every_shipped_case_valid(self, catalog):
        for e in catalog.values():
            if e.kind == "stratification":
                assert validate_case(e.payload) == [], e.label

    def test_dangling_reference(self):
        obj = case_with(points=[{"id": "p", "incidences": [{"stratum": "ξ9", "multiplicity": 1}]}])
        problems = validate_case(parse_case(json.dumps(obj)))
        assert len(problems) == 1 and "dangling" in problems[0]

    def test_trivial_stabilizer(self):
        obj = case_with(strata=[{"id": "a", "stabilizer_order": 1, "quotient_genus": 0},
                                {"id": "b", "stabilizer_order": 3, "quotient_genus": 0}])
        problems = validate_case(parse_case(json.dumps(obj)))
        assert len(problems) == 1 and "stabilizer" in problems[0]

    def test_nonstandard_form(self):
        problems = validate_case(parse_case(json.dumps(case_with(standard_form=False))))
        assert problems == ["action is not in standard form"]

    def test_duplicates(self):
        obj = case_with(strata=BASE["strata"] + [BASE["strata"][0]])
        assert any("duplicate" in p for p in validate_case(parse_case(json.dumps(obj))))


class TestRiemannHurwitz:
    def test_double_cover_of_elliptic(self):
        # 2*3-2 = 2(2g'-2) + 4 forces g' = 1 with four branch points
        assert rh_quotient_genus(3, 2, [2] * 4) == 1

    def test_eight_branch_points_give_rational_base(self):
        assert rh_quotient_genus(3, 2, [2] * 8) == 0

    def test_identity_cover(self):
        assert rh_quotient_genus(0, 1, []) == 0

    @pytest.mark.parametrize(
        "g,d,ram,expected",
        [
            (2, 2, [2] * 6, 0),  # hyperelliptic genus 2
            (5, 2, [2] * 4, 2),
            (1, 3, [3] * 3, 0),  # Fermat cubic over P1
            (3, 4, [4] * 4, 0),
            (9, 2, [2] * 4, 4),
        ],
    )
    def test_known_covers(self, g, d, ram, expected):
        assert rh_quotient_genus(g, d, ram) == expected
        assert 2 * g - 2 == d * (2 * expected - 2) + sum(e - 1 for e in ram)

    def test_inconsistent(self):
        with pytest.raises(InconsistentRamification):
            rh_quotient_genus(1, 2, [2])
        with pytest.raises(InconsistentRamification):
            rh_quotient_genus(0, 2, [2] * 4)
        with pytest.raises(InconsistentRamification):
            rh_quotient_genus(2, 2, [1])
