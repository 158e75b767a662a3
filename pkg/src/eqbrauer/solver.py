"""Brauer group of a quotient stack from a stratification case.

The ramified part is the group of residue data on the quotient curves
that cancels at every point orbit: each stratum xi with stabilizer of
order m contributes one Z/m variable per incident point orbit, subject to

* a degree-zero row per stratum (the residues come from a function on
  the quotient curve), and
* a cancellation row per point orbit (second residues sum to zero).

All variables live in Z/N with N the lcm of the stabilizer orders; a
stratum of order m only takes values in the m-torsion (N/m) Z/N, which is
how strata of different orders interact at shared points.  A quotient
curve of genus g' adds an unramified summand (Z/m)^(2 g').

The alternative computation for actions with no curve data goes through
the Schur multiplier modulo the Amitsur subgroup.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd, lcm, prod
from typing import Any, Sequence

import numpy as np

from .abelian import (
    AbelianGroup,
    InvalidInput,
    direct_sum,
    divisors,
    group_from_order_profile,
    quotient_group,
    solution_group,
    torsion_part,
)
from .strata import GroupSpec, StratificationCase, validate_case

DEFAULT_ORACLE_CAP = 10_000_000


class InvalidCase(InvalidInput):
    def __init__(self, label: str, violations: list[str]):
        super().__init__(f"case {label!r} rejected: " + "; ".join(violations))
        self.violations = violations


class OracleCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Variable:
    stratum: str
    point: str
    modulus: int


@dataclass(frozen=True)
class SolutionSystem:
    variables: tuple[Variable, ...]
    N: int
    constraints: tuple[tuple[int, ...], ...]
    row_labels: tuple[str, ...] = ()

    @property
    def moduli(self) -> list[int]:
        return [v.modulus for v in self.variables]


@dataclass(frozen=True)
class BrauerResult:
    label: str
    total: AbelianGroup
    ramified_part: AbelianGroup
    unramified_part: AbelianGroup
    per_n: dict[int, AbelianGroup] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return {
            "label": self.label,
            "total": self.total.to_list(),
            "ramified": self.ramified_part.to_list(),
            "unramified": self.unramified_part.to_list(),
            "per_n": {str(n): g.to_list() for n, g in sorted(self.per_n.items())},
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=False)


def _require_valid(case: StratificationCase) -> None:
    problems = validate_case(case)
    if problems:
        raise InvalidCase(case.label, problems)


def build_system(case: StratificationCase) -> SolutionSystem:
    _require_valid(case)
    N = lcm(*(s.stabilizer_order for s in case.strata)) if case.strata else 1
    variables: list[Variable] = []
    index: dict[tuple[str, str], int] = {}
    for s in case.strata:
        for p, _ in case.points_on(s.id):
            if (s.id, p.id) in index:
                continue
            index[(s.id, p.id)] = len(variables)
            variables.append(Variable(s.id, p.id, s.stabilizer_order))

    rows: list[tuple[int, ...]] = []
    labels: list[str] = []
    width = len(variables)

    def scale(v: Variable) -> int:
        return N // v.modulus

    for s in case.strata:
        incident = case.points_on(s.id)
        if not incident:
            continue
        row = [0] * width
        for p, mult in incident:
            j = index[(s.id, p.id)]
            row[j] = (row[j] + mult * scale(variables[j])) % N
        rows.append(tuple(row))
        labels.append(f"degree:{s.id}")
    for p in case.points:
        row = [0] * width
        for sid, mult in p.incidences:
            j = index[(sid, p.id)]
            row[j] = (row[j] + mult * scale(variables[j])) % N
        rows.append(tuple(row))
        labels.append(f"cancel:{p.id}")
    return SolutionSystem(tuple(variables), N, tuple(rows), tuple(labels))


def unramified_part(case: StratificationCase) -> AbelianGroup:
    orders = []
    for s in case.strata:
        orders += [s.stabilizer_order] * (2 * s.quotient_genus)
    return AbelianGroup.from_orders(orders)


def _assemble(case: StratificationCase, ramified: AbelianGroup) -> BrauerResult:
    unram = unramified_part(case)
    total = direct_sum(ramified, unram)
    per_n = {n: torsion_part(total, n) for n in case.stabilizer_orders}
    return BrauerResult(case.label, total, ramified, unram, per_n)


def solve(case: StratificationCase) -> BrauerResult:
    system = build_system(case)
    ramified = solution_group(system.moduli, [list(r) for r in system.constraints], system.N)
    return _assemble(case, ramified)


def enumeration_size(case: StratificationCase) -> int:
    """Number of residue assignments the brute-force oracle would visit."""
    return prod(s.stabilizer_order ** len({p.id for p, _ in case.points_on(s.id)}) for s in case.strata)


def brute_force(case: StratificationCase, cap: int = DEFAULT_ORACLE_CAP) -> AbelianGroup:
    """Total Brauer group by exhaustive enumeration of residue assignments.

    Builds its own constraint checks straight from the incidence data, keeps
    every assignment that satisfies them, and reads the group structure off
    the counts #{x : e x = 0} for e dividing the exponent.  The unramified
    summands are added from the quotient genera.
    """
    _require_valid(case)
    size = enumeration_size(case)
    if size > cap:
        raise OracleCapExceeded(f"{case.label}: {size} assignments exceeds cap {cap}")

    N = lcm(*(s.stabilizer_order for s in case.strata)) if case.strata else 1
    slots: list[tuple[str, str, int]] = []
    for s in case.strata:
        for pid in dict.fromkeys(p.id for p, _ in case.points_on(s.id)):
            slots.append((s.id, pid, s.stabilizer_order))
    k = len(slots)
    if k == 0:
        return unramified_part(case)
    moduli = np.array([m for _, _, m in slots], dtype=np.int64)
    weight = {(sid, pid): N // m for sid, pid, m in slots}
    position = {(sid, pid): j for j, (sid, pid, _) in enumerate(slots)}

    # each check is a coefficient vector over the slots, evaluated mod N
    checks = []
    for s in case.strata:
        vec = np.zeros(k, dtype=np.int64)
        for p, mult in case.points_on(s.id):
            vec[position[(s.id, p.id)]] += mult * weight[(s.id, p.id)]
        if vec.any():
            checks.append(vec)
    for p in case.points:
        vec = np.zeros(k, dtype=np.int64)
        for sid, mult in p.incidences:
            vec[position[(sid, p.id)]] += mult * weight[(sid, p.id)]
        checks.append(vec)
    C = np.array(checks, dtype=np.int64).T if checks else np.zeros((k, 0), dtype=np.int64)

    radix = np.cumprod(np.concatenate(([1], moduli[:-1])))
    kept = []
    chunk = 1 << 18
    for start in range(0, size, chunk):
        idx = np.arange(start, min(size, start + chunk), dtype=np.int64)
        states = (idx[:, None] // radix[None, :]) % moduli[None, :]
        ok = ((states @ C) % N == 0).all(axis=1)
        if ok.any():
            kept.append(states[ok])
    sols = np.concatenate(kept) if kept else np.zeros((0, k), dtype=np.int64)
    exponent = lcm(*(int(m) for m in moduli))
    profile = {e: int(((sols * e) % moduli == 0).all(axis=1).sum()) for e in divisors(exponent)}
    ramified = group_from_order_profile(profile)
    return direct_sum(ramified, unramified_part(case))


# --------------------------------------------------------------------------
# Schur multiplier / Amitsur path


def schur_basis(group: GroupSpec) -> list[tuple[int, int, int]]:
    """Canonical cyclic decomposition of H^2(G, C^x): one Z/gcd(n_i, n_j) per pair i < j."""
    n = group.cyclic_orders
    return [(i, j, gcd(n[i], n[j])) for i in range(len(n)) for j in range(i + 1, len(n))]


def schur_multiplier(group: GroupSpec) -> AbelianGroup:
    return AbelianGroup.from_orders(d for _, _, d in schur_basis(group))


def brauer_from_amitsur(group: GroupSpec, amitsur_gens: Sequence[Sequence[int]]) -> AbelianGroup:
    """H^2(G, C^x) / Am(X, G), with generators written in the pairwise basis of :func:`schur_basis`."""
    basis = schur_basis(group)
    for g in amitsur_gens:
        if len(g) != len(basis):
            raise InvalidInput(
                f"Amitsur generator {list(g)} has {len(g)} entries; the Schur multiplier of "
                f"{group.name} has {len(basis)} pairwise factors"
            )
    return quotient_group([d for _, _, d in basis], amitsur_gens)
