"""Stratification cases: curves with nontrivial generic stabilizers and their incidences.

A case records, for a finite group acting on a rational surface in
standard form, every curve orbit whose generic stabilizer is nontrivial
(its stabilizer order and the genus of its quotient curve) together with
the point orbits where the images of two such curves meet.  That is all
the residue solver needs.

Cases are stored one JSON document per file; see :func:`case_from_dict`
for the accepted fields.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .abelian import AbelianGroup, InvalidInput


class CaseFormatError(InvalidInput):
    """Malformed case document (wrong types, missing or unknown fields)."""


class InconsistentRamification(InvalidInput):
    """Riemann-Hurwitz data that admits no nonnegative integral quotient genus."""


@dataclass(frozen=True)
class GroupSpec:
    name: str
    cyclic_orders: tuple[int, ...]

    @property
    def order(self) -> int:
        n = 1
        for c in self.cyclic_orders:
            n *= c
        return n


@dataclass(frozen=True)
class Stratum:
    id: str
    stabilizer_order: int
    quotient_genus: int
    genus: int | None = None
    label: str | None = None


@dataclass(frozen=True)
class PointOrbit:
    id: str
    incidences: tuple[tuple[str, int], ...]


@dataclass(frozen=True)
class StratificationCase:
    label: str
    group: GroupSpec
    strata: tuple[Stratum, ...] = ()
    points: tuple[PointOrbit, ...] = ()
    standard_form: bool = True
    expected_brauer: AbelianGroup | None = None
    notes: str = ""

    def stratum(self, sid: str) -> Stratum:
        for s in self.strata:
            if s.id == sid:
                return s
        raise KeyError(sid)

    def points_on(self, sid: str) -> list[tuple[PointOrbit, int]]:
        """Point orbits incident to stratum ``sid`` with their multiplicities, in file order."""
        out = []
        for p in self.points:
            for s, mult in p.incidences:
                if s == sid:
                    out.append((p, mult))
        return out

    @property
    def stabilizer_orders(self) -> list[int]:
        return sorted({s.stabilizer_order for s in self.strata})


def validate_case(case: StratificationCase) -> list[str]:
    """Every schema violation in ``case``; an empty list means the case is usable."""
    problems: list[str] = []
    if not case.group.cyclic_orders:
        problems.append("group has no cyclic factors")
    for n in case.group.cyclic_orders:
        if n < 1:
            problems.append(f"group cyclic order {n} < 1")
    seen: set[str] = set()
    for s in case.strata:
        if s.id in seen:
            problems.append(f"duplicate stratum id {s.id!r}")
        seen.add(s.id)
        if s.stabilizer_order < 2:
            problems.append(f"stratum {s.id!r}: stabilizer order {s.stabilizer_order} < 2")
        if s.quotient_genus < 0:
            problems.append(f"stratum {s.id!r}: negative quotient genus {s.quotient_genus}")
        if s.genus is not None and s.genus < 0:
            problems.append(f"stratum {s.id!r}: negative genus {s.genus}")
    point_ids: set[str] = set()
    for p in case.points:
        if p.id in point_ids:
            problems.append(f"duplicate point id {p.id!r}")
        point_ids.add(p.id)
        if not p.incidences:
            problems.append(f"point {p.id!r} has no incidences")
        for sid, mult in p.incidences:
            if sid not in seen:
                problems.append(f"point {p.id!r}: dangling reference to stratum {sid!r}")
            if mult < 1:
                problems.append(f"point {p.id!r}: multiplicity {mult} < 1 at {sid!r}")
    if not case.standard_form:
        problems.append("action is not in standard form")
    return problems


# --------------------------------------------------------------------------
# JSON schema

_CASE_FIELDS = {"label", "group", "strata", "points", "standard_form", "expected_brauer", "notes"}
_CASE_REQUIRED = {"label", "group", "strata", "points", "standard_form"}
_GROUP_FIELDS = {"name", "cyclic_orders"}
_STRATUM_FIELDS = {"id", "stabilizer_order", "quotient_genus", "genus", "label"}
_STRATUM_REQUIRED = {"id", "stabilizer_order", "quotient_genus"}
_POINT_FIELDS = {"id", "incidences"}
_INCIDENCE_FIELDS = {"stratum", "multiplicity"}


def _check_keys(obj: Any, allowed: set[str], required: set[str], where: str) -> None:
    if not isinstance(obj, dict):
        raise CaseFormatError(f"{where}: expected an object")
    unknown = set(obj) - allowed
    if unknown:
        raise CaseFormatError(f"{where}: unknown field(s) {sorted(unknown)}")
    missing = required - set(obj)
    if missing:
        raise CaseFormatError(f"{where}: missing field(s) {sorted(missing)}")


def _int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise CaseFormatError(f"{where}: expected an integer, got {value!r}")
    return value


def _str(value: Any, where: str) -> str:
    if not isinstance(value, str):
        raise CaseFormatError(f"{where}: expected a string, got {value!r}")
    return value


def group_from_dict(obj: Any, where: str = "group") -> GroupSpec:
    _check_keys(obj, _GROUP_FIELDS, _GROUP_FIELDS, where)
    orders = obj["cyclic_orders"]
    if not isinstance(orders, list):
        raise CaseFormatError(f"{where}.cyclic_orders: expected a list")
    return GroupSpec(_str(obj["name"], f"{where}.name"), tuple(_int(n, f"{where}.cyclic_orders") for n in orders))


def abelian_from_list(value: Any, where: str) -> AbelianGroup:
    if not isinstance(value, list):
        raise CaseFormatError(f"{where}: expected a list of invariant factors")
    try:
        return AbelianGroup(tuple(_int(d, where) for d in value))
    except CaseFormatError:
        raise
    except InvalidInput as exc:
        raise CaseFormatError(f"{where}: {exc}") from None


def case_from_dict(obj: Any) -> StratificationCase:
    """Build a case from its JSON object, rejecting unknown or mistyped fields."""
    _check_keys(obj, _CASE_FIELDS, _CASE_REQUIRED, "case")
    label = _str(obj["label"], "label")
    group = group_from_dict(obj["group"])
    if not isinstance(obj["strata"], list) or not isinstance(obj["points"], list):
        raise CaseFormatError("strata and points must be lists")
    strata = []
    for i, s in enumerate(obj["strata"]):
        where = f"strata[{i}]"
        _check_keys(s, _STRATUM_FIELDS, _STRATUM_REQUIRED, where)
        genus = s.get("genus")
        lab = s.get("label")
        strata.append(
            Stratum(
                id=_str(s["id"], f"{where}.id"),
                stabilizer_order=_int(s["stabilizer_order"], f"{where}.stabilizer_order"),
                quotient_genus=_int(s["quotient_genus"], f"{where}.quotient_genus"),
                genus=None if genus is None else _int(genus, f"{where}.genus"),
                label=None if lab is None else _str(lab, f"{where}.label"),
            )
        )
    points = []
    for i, p in enumerate(obj["points"]):
        where = f"points[{i}]"
        _check_keys(p, _POINT_FIELDS, _POINT_FIELDS, where)
        if not isinstance(p["incidences"], list):
            raise CaseFormatError(f"{where}.incidences: expected a list")
        inc = []
        for j, e in enumerate(p["incidences"]):
            w = f"{where}.incidences[{j}]"
            _check_keys(e, _INCIDENCE_FIELDS, {"stratum"}, w)
            inc.append((_str(e["stratum"], f"{w}.stratum"), _int(e.get("multiplicity", 1), f"{w}.multiplicity")))
        points.append(PointOrbit(_str(p["id"], f"{where}.id"), tuple(inc)))
    if not isinstance(obj["standard_form"], bool):
        raise CaseFormatError("standard_form: expected a boolean")
    expected = obj.get("expected_brauer")
    return StratificationCase(
        label=label,
        group=group,
        strata=tuple(strata),
        points=tuple(points),
        standard_form=obj["standard_form"],
        expected_brauer=None if expected is None else abelian_from_list(expected, "expected_brauer"),
        notes=_str(obj.get("notes", ""), "notes"),
    )


def case_to_dict(case: StratificationCase) -> dict[str, Any]:
    strata = []
    for s in case.strata:
        d: dict[str, Any] = {"id": s.id, "stabilizer_order": s.stabilizer_order, "quotient_genus": s.quotient_genus}
        if s.genus is not None:
            d["genus"] = s.genus
        if s.label is not None:
            d["label"] = s.label
        strata.append(d)
    out: dict[str, Any] = {
        "label": case.label,
        "group": {"name": case.group.name, "cyclic_orders": list(case.group.cyclic_orders)},
        "strata": strata,
        "points": [
            {"id": p.id, "incidences": [{"stratum": s, "multiplicity": m} for s, m in p.incidences]}
            for p in case.points
        ],
        "standard_form": case.standard_form,
    }
    if case.expected_brauer is not None:
        out["expected_brauer"] = case.expected_brauer.to_list()
    if case.notes:
        out["notes"] = case.notes
    return out


def parse_case(text: str) -> StratificationCase:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CaseFormatError(f"invalid JSON: {exc}") from None
    return case_from_dict(obj)


def render_case(case: StratificationCase) -> str:
    return json.dumps(case_to_dict(case), indent=2, ensure_ascii=False) + "\n"


def load_case(path: str | Path) -> StratificationCase:
    return parse_case(Path(path).read_text(encoding="utf-8"))


# --------------------------------------------------------------------------
# Riemann-Hurwitz


def rh_quotient_genus(g: int, d: int, ramification: list[int]) -> int:
    """Genus g' of the base of a degree-d cover by a genus-g curve.

    Solves 2g - 2 = d (2g' - 2) + sum(e_P - 1) over the ramification
    indices e_P of the points upstairs.
    """
    if g < 0 or d < 1:
        raise InconsistentRamification(f"need g >= 0 and d >= 1, got g={g}, d={d}")
    if any(e < 2 for e in ramification):
        raise InconsistentRamification("ramification indices must be >= 2")
    rhs = 2 * g - 2 - sum(e - 1 for e in ramification)
    if rhs % d:
        raise InconsistentRamification(f"2g-2-R = {rhs} is not divisible by the degree {d}")
    twice = rhs // d + 2
    if twice % 2 or twice < 0:
        raise InconsistentRamification(f"no integral genus: 2g' = {twice}")
    return twice // 2
