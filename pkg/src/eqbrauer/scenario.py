"""Symbol scenarios: a Z/2 symbol plus the divisors at which to check it.

A scenario file is one JSON object::

    {
      "name": "...",
      "description": "...",                       (optional)
      "definitions": {"q": "-y1*y4 + ..."},       (optional text macros)
      "models": {
        "<model>": {"variables": [...], "a": "...", "b": "..."}
      },
      "divisors": [
        {
          "name": "E12",
          "model": "<model>",
          "stabilizer_order": 1,
          "chart": {"variables": [...], "map": {"y1": "z1*(y5^2-1)"}},   (optional)
          "generator": "y5^2 - 1",
          "main_variable": "y5",
          "strategy": {"kind": "auto" | "rational-field" | "witness" | "quadratic-extension", ...}
        }
      ],
      "expected": {"in_br": true, "nonzero": true,
                   "divisors": {"E12": {"v_a": 1, "v_b": 1, "residue": "Trivial"}}}   (optional)
    }

Generators, witnesses and strategy data are written in the chart's variables
(the model's when there is no chart).  Witness strategies carry ``witness``,
``relation`` and ``solved_variable``; quadratic-extension strategies carry
``t``, ``param``, ``u``, ``d`` and optionally ``curve`` with ``substitute``
and ``variable``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .abelian import InvalidInput
from .poly import ParseError, PolynomialError, parse_poly, parse_ratfunc
from .residue import (
    Auto,
    ChartMap,
    DivisorSpec,
    QuadraticExtension,
    RationalField,
    ResidueError,
    StackClassReport,
    Symbol,
    Valuation,
    Witness,
    check_stack_class,
)


class ScenarioFormatError(InvalidInput):
    pass


@dataclass(frozen=True)
class Scenario:
    name: str
    symbol: Symbol
    divisors: tuple[DivisorSpec, ...]
    expected: dict[str, Any] = field(default_factory=dict)
    description: str = ""

    def run(self) -> StackClassReport:
        return check_stack_class(self.divisors, self.symbol)


_TOP = {"name", "description", "definitions", "models", "divisors", "expected"}
_DIVISOR = {"name", "model", "stabilizer_order", "chart", "generator", "main_variable", "strategy"}


def _keys(obj: Any, allowed: set[str], required: set[str], where: str) -> None:
    if not isinstance(obj, dict):
        raise ScenarioFormatError(f"{where}: expected an object")
    extra = set(obj) - allowed
    if extra:
        raise ScenarioFormatError(f"{where}: unknown field(s) {sorted(extra)}")
    missing = required - set(obj)
    if missing:
        raise ScenarioFormatError(f"{where}: missing field(s) {sorted(missing)}")


def scenario_from_dict(obj: Any) -> Scenario:
    _keys(obj, _TOP, {"name", "models", "divisors"}, "scenario")
    defs = obj.get("definitions", {})
    if not isinstance(defs, dict) or not all(isinstance(v, str) for v in defs.values()):
        raise ScenarioFormatError("definitions: expected a map of strings")
    try:
        return _build(obj, defs)
    except (ParseError, PolynomialError, ResidueError, ZeroDivisionError) as exc:
        raise ScenarioFormatError(f"scenario {obj.get('name')!r}: {exc}") from None


def _build(obj: dict, defs: dict[str, str]) -> Scenario:
    models: dict[str, tuple[tuple[str, ...], Symbol]] = {}
    if not isinstance(obj["models"], dict) or not obj["models"]:
        raise ScenarioFormatError("models: expected a nonempty object")
    for mname, m in obj["models"].items():
        _keys(m, {"variables", "a", "b"}, {"variables", "a", "b"}, f"models.{mname}")
        vs = tuple(m["variables"])
        models[mname] = (vs, Symbol(parse_ratfunc(m["a"], vs, defs), parse_ratfunc(m["b"], vs, defs)))
    default = next(iter(models))

    divisors = []
    if not isinstance(obj["divisors"], list):
        raise ScenarioFormatError("divisors: expected a list")
    for i, d in enumerate(obj["divisors"]):
        where = f"divisors[{i}]"
        _keys(d, _DIVISOR, {"name", "stabilizer_order", "generator", "main_variable"}, where)
        mname = d.get("model", default)
        if mname not in models:
            raise ScenarioFormatError(f"{where}: unknown model {mname!r}")
        mvars, sym = models[mname]
        chart = None
        local = mvars
        if d.get("chart") is not None:
            c = d["chart"]
            _keys(c, {"variables", "map"}, {"variables", "map"}, f"{where}.chart")
            local = tuple(c["variables"])
            subs = {k: parse_ratfunc(v, local, defs) for k, v in c["map"].items()}
            for k in subs:
                if k not in mvars:
                    raise ScenarioFormatError(f"{where}.chart: {k!r} is not a variable of model {mname!r}")
            chart = ChartMap(subs, local)
        gen = parse_poly(d["generator"], local, defs)
        strategy = _strategy(d.get("strategy", {"kind": "auto"}), local, defs, f"{where}.strategy")
        order = d["stabilizer_order"]
        if isinstance(order, bool) or not isinstance(order, int) or order < 1:
            raise ScenarioFormatError(f"{where}.stabilizer_order: expected a positive integer")
        divisors.append(
            DivisorSpec(
                name=d["name"],
                valuation=Valuation(gen, d["main_variable"]),
                chart=chart,
                stabilizer_order=order,
                strategy=strategy,
                symbol=sym,
            )
        )
    names = [d.name for d in divisors]
    if len(set(names)) != len(names):
        raise ScenarioFormatError("divisor names must be unique")
    return Scenario(
        name=obj["name"],
        symbol=models[default][1],
        divisors=tuple(divisors),
        expected=obj.get("expected", {}),
        description=obj.get("description", ""),
    )


def _strategy(s: Any, local: tuple[str, ...], defs: dict[str, str], where: str):
    if not isinstance(s, dict) or "kind" not in s:
        raise ScenarioFormatError(f"{where}: expected an object with a kind")
    kind = s["kind"]
    if kind == "auto":
        _keys(s, {"kind"}, {"kind"}, where)
        return Auto()
    if kind == "rational-field":
        _keys(s, {"kind"}, {"kind"}, where)
        return RationalField()
    if kind == "witness":
        _keys(s, {"kind", "witness", "relation", "solved_variable"}, {"kind", "witness"}, where)
        rel = s.get("relation")
        return Witness(
            witness=parse_ratfunc(s["witness"], local, defs),
            relation=None if rel is None else parse_poly(rel, local, defs),
            solved_variable=s.get("solved_variable"),
        )
    if kind == "quadratic-extension":
        _keys(s, {"kind", "t", "param", "u", "d", "curve"}, {"kind", "t", "param", "u", "d"}, where)
        t = s["t"]
        curve_sub = curve_var = None
        if "curve" in s:
            _keys(s["curve"], {"substitute", "variable"}, {"substitute", "variable"}, f"{where}.curve")
            cvars = tuple(local) + (t,)
            curve_sub = {k: parse_ratfunc(v, cvars, defs) for k, v in s["curve"]["substitute"].items()}
            curve_var = s["curve"]["variable"]
        return QuadraticExtension(
            param=parse_ratfunc(s["param"], local, defs),
            t=t,
            u=parse_ratfunc(s["u"], (t,), defs),
            d=parse_poly(s["d"], (t,), defs),
            curve_substitution=curve_sub,
            curve_variable=curve_var,
        )
    raise ScenarioFormatError(f"{where}: unknown strategy kind {kind!r}")


def parse_scenario(text: str) -> Scenario:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioFormatError(f"invalid JSON: {exc}") from None
    return scenario_from_dict(obj)


def load_scenario(path: str | Path) -> Scenario:
    return parse_scenario(Path(path).read_text(encoding="utf-8"))


def compare_expected(scenario: Scenario, report: StackClassReport) -> list[str]:
    """Differences between a run and the scenario's recorded expectations."""
    exp = scenario.expected
    out = []
    for key in ("in_br", "nonzero"):
        if key in exp and getattr(report, key) != exp[key]:
            out.append(f"{key}: expected {exp[key]}, got {getattr(report, key)}")
    by_name = {d.name: d for d in report.divisors}
    for name, want in exp.get("divisors", {}).items():
        got = by_name.get(name)
        if got is None:
            out.append(f"{name}: missing from run")
            continue
        actual = {"v_a": got.report.v_a, "v_b": got.report.v_b, "residue": got.residue.value,
                  "passes": got.passes, "killed_by_stabilizer": got.killed_by_stabilizer}
        for k, v in want.items():
            if k not in actual:
                out.append(f"{name}: unknown expectation key {k!r}")
            elif actual[k] != v:
                out.append(f"{name}.{k}: expected {v}, got {actual[k]}")
    return out
