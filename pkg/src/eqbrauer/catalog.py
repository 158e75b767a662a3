"""Shipped catalog of cases and batch verification.

Catalog files live in the package under ``data/catalog/<label>.json``
(stratification or Amitsur entries) and ``data/scenarios/<name>.json``
(symbol scenarios).  An Amitsur entry is recognized by its
``amitsur_generators`` field.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fnmatch import fnmatchcase
from importlib import resources
from pathlib import Path
from typing import Any, Iterable

from .abelian import AbelianGroup, InvalidInput, torsion_part
from .scenario import Scenario, compare_expected, parse_scenario
from .solver import DEFAULT_ORACLE_CAP, OracleCapExceeded, brauer_from_amitsur, brute_force, enumeration_size, solve
from .strata import (
    CaseFormatError,
    GroupSpec,
    StratificationCase,
    _check_keys,
    abelian_from_list,
    case_from_dict,
    group_from_dict,
)

KINDS = ("stratification", "amitsur", "symbol-scenario")


@dataclass(frozen=True)
class AmitsurCase:
    label: str
    group: GroupSpec
    amitsur_generators: tuple[tuple[int, ...], ...]
    expected_brauer: AbelianGroup | None = None
    notes: str = ""


def amitsur_from_dict(obj: Any) -> AmitsurCase:
    _check_keys(obj, {"label", "group", "amitsur_generators", "expected_brauer", "notes"}, {"label", "group", "amitsur_generators"}, "amitsur case")
    gens = obj["amitsur_generators"]
    if not isinstance(gens, list) or not all(isinstance(g, list) and all(isinstance(x, int) for x in g) for g in gens):
        raise CaseFormatError("amitsur_generators: expected a list of integer lists")
    exp = obj.get("expected_brauer")
    return AmitsurCase(
        label=obj["label"],
        group=group_from_dict(obj["group"]),
        amitsur_generators=tuple(tuple(g) for g in gens),
        expected_brauer=None if exp is None else abelian_from_list(exp, "expected_brauer"),
        notes=obj.get("notes", ""),
    )


@dataclass(frozen=True)
class CatalogEntry:
    path: str
    kind: str
    label: str
    payload: StratificationCase | AmitsurCase | Scenario
    expected: Any
    provenance: str


def _entry_from_text(path: str, text: str, kind_hint: str) -> CatalogEntry:
    if kind_hint == "symbol-scenario":
        sc = parse_scenario(text)
        return CatalogEntry(path, "symbol-scenario", sc.name, sc, sc.expected, sc.name)
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CaseFormatError(f"{path}: invalid JSON: {exc}") from None
    if isinstance(obj, dict) and "amitsur_generators" in obj:
        case = amitsur_from_dict(obj)
        kind = "amitsur"
    else:
        case = case_from_dict(obj)
        kind = "stratification"
    if case.expected_brauer is None:
        raise CaseFormatError(f"{path}: catalog entries must carry expected_brauer")
    return CatalogEntry(path, kind, case.label, case, case.expected_brauer, case.label.split("_")[0].removesuffix(".am"))


def _data_dir():
    return resources.files("eqbrauer") / "data"


def load_catalog(root: str | Path | None = None) -> list[CatalogEntry]:
    """All shipped entries (or those under ``root``), sorted by label."""
    base = Path(root) if root is not None else _data_dir()
    entries = []
    for sub, kind in (("catalog", "stratification"), ("scenarios", "symbol-scenario")):
        folder = base / sub
        if not folder.is_dir():
            continue
        for f in sorted(folder.iterdir(), key=lambda p: p.name):
            if f.name.endswith(".json"):
                entries.append(_entry_from_text(str(f), f.read_text(encoding="utf-8"), kind))
    labels = [e.label for e in entries]
    dup = {x for x in labels if labels.count(x) > 1}
    if dup:
        raise CaseFormatError(f"duplicate catalog labels: {sorted(dup)}")
    return sorted(entries, key=lambda e: e.label)


def select(entries: Iterable[CatalogEntry], pattern: str | None) -> list[CatalogEntry]:
    if not pattern:
        return list(entries)
    return [e for e in entries if fnmatchcase(e.label, pattern)]


@dataclass
class EntryResult:
    label: str
    kind: str
    expected: Any
    computed: Any
    match: bool
    oracle: str
    seconds: float
    problems: list[str] = field(default_factory=list)

    def to_json(self, timing: bool = True) -> dict[str, Any]:
        out = {
            "label": self.label,
            "kind": self.kind,
            "expected": self.expected,
            "computed": self.computed,
            "match": self.match,
            "oracle": self.oracle,
        }
        if self.problems:
            out["problems"] = self.problems
        if timing:
            out["seconds"] = round(self.seconds, 4)
        return out


@dataclass
class VerificationReport:
    entries: list[EntryResult]

    @property
    def matched(self) -> int:
        return sum(e.match for e in self.entries)

    @property
    def mismatched(self) -> list[str]:
        return [e.label for e in self.entries if not e.match]

    @property
    def ok(self) -> bool:
        return not self.mismatched

    def summary(self) -> dict[str, Any]:
        return {
            "total": len(self.entries),
            "matched": self.matched,
            "mismatched": len(self.entries) - self.matched,
            "oracle_checked": sum(e.oracle == "agree" for e in self.entries),
            "oracle_skipped": sum(e.oracle.startswith("skipped") for e in self.entries),
        }

    def to_json(self, timing: bool = True) -> dict[str, Any]:
        return {"entries": [e.to_json(timing) for e in self.entries], "summary": self.summary()}


def verify_entry(entry: CatalogEntry, oracle_cap: int = DEFAULT_ORACLE_CAP) -> EntryResult:
    start = time.perf_counter()
    problems: list[str] = []
    oracle = "n/a"
    if entry.kind == "stratification":
        case = entry.payload
        result = solve(case)
        computed = result.total.to_list()
        expected = entry.expected.to_list()
        if result.total != entry.expected:
            problems.append(f"solver gives {result.total}, expected {entry.expected}")
        for n, g in result.per_n.items():
            if g != torsion_part(result.total, n):
                problems.append(f"per_n[{n}] inconsistent")
        if enumeration_size(case) <= oracle_cap:
            bf = brute_force(case, oracle_cap)
            oracle = "agree" if bf == result.total else "disagree"
            if bf != result.total:
                problems.append(f"oracle gives {bf}")
        else:
            oracle = f"skipped ({enumeration_size(case)} states)"
    elif entry.kind == "amitsur":
        case = entry.payload
        got = brauer_from_amitsur(case.group, case.amitsur_generators)
        computed, expected = got.to_list(), entry.expected.to_list()
        if got != entry.expected:
            problems.append(f"quotient gives {got}, expected {entry.expected}")
    else:
        sc = entry.payload
        report = sc.run()
        computed = {"in_br": report.in_br, "nonzero": report.nonzero, "summary": report.summary()}
        expected = sc.expected
        problems += compare_expected(sc, report)
        if report.unknown:
            problems.append("Unknown verdicts at " + ", ".join(report.unknown))
    return EntryResult(entry.label, entry.kind, expected, computed, not problems, oracle, time.perf_counter() - start, problems)


def verify(entries: Iterable[CatalogEntry], oracle_cap: int = DEFAULT_ORACLE_CAP) -> VerificationReport:
    return VerificationReport([verify_entry(e, oracle_cap) for e in sorted(entries, key=lambda e: e.label)])
