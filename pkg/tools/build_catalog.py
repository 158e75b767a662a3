"""Regenerate the shipped catalog JSON from the compact tables below.

Run from the repository root:  python tools/build_catalog.py
"""

from __future__ import annotations

import json
from math import gcd
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "eqbrauer" / "data" / "catalog"

# label: (group name, cyclic orders, [(stabilizer order, quotient genus, genus)], {(i, j): p_ij}, expected, notes)
STRAT = {
    "2.G": ("C2", [2], [(2, 3, 3)], {}, [2] * 6, ""),
    "1.B": ("C2", [2], [(2, 4, 4)], {}, [2] * 8, ""),
    "3.3": ("C3", [3], [(3, 1, 1)], {}, [3] * 2, ""),
    "1.ρ": ("C3", [3], [(3, 2, 2)], {}, [3] * 4, ""),
    "2.4": ("C4", [4], [(4, 1, 1)], {}, [4] * 2, ""),
    "1.B2.2": ("C4", [4], [(2, 2, 4)], {}, [2] * 4, ""),
    "1.5": ("C5", [5], [(5, 1, 1)], {}, [5] * 2, ""),
    "3.6.1": ("C6", [6], [(2, 0, 1), (3, 0, 1)], {}, [], "coprime stabilizer orders, genus-0 quotients: intersection points cannot contribute and are omitted"),
    "3.6.2": ("C6", [6], [(2, 1, 1)], {}, [2] * 2, ""),
    "2.G3.1": ("C6", [6], [(2, 0, 3), (3, 0, 1)], {}, [], "coprime stabilizer orders, genus-0 quotients: intersection points omitted"),
    "2.G3.2": ("C6", [6], [(2, 1, 3)], {}, [2] * 2, ""),
    "2.6": ("C6", [6], [(3, 1, 1)], {}, [3] * 2, ""),
    "1.σρ": ("C6", [6], [(2, 0, 4), (3, 0, 2)], {}, [], "coprime stabilizer orders, genus-0 quotients: intersection points omitted"),
    "1.ρ2": ("C6", [6], [(2, 0, 1), (3, 0, 2)], {}, [], "coprime stabilizer orders, genus-0 quotients: intersection points omitted"),
    "1.B3.1": ("C6", [6], [(2, 0, 4), (3, 0, 1)], {}, [], "coprime stabilizer orders, genus-0 quotients: intersection points omitted"),
    "1.B3.2": ("C6", [6], [(2, 2, 4)], {}, [2] * 4, ""),
    "1.6": ("C6", [6], [(6, 1, 1)], {}, [6] * 2, ""),
    "1.B4.2": (
        "C8", [8],
        [(2, 0, 0), (2, 0, 0), (2, 0, 0), (2, 0, 0), (2, 0, 0), (2, 0, 0)],
        {(1, 5): 1, (3, 5): 1, (4, 5): 1, (2, 6): 1, (3, 6): 1, (4, 6): 1},
        [2],
        "[derived-input] post-resolution stratification. Strata 1-3 are the strict transforms of x=0, y=0 and "
        "lambda xyz + x^4 + y^4 = 0; 4 is the exceptional curve over the triple point, 5 and 6 the exceptional "
        "curves over the two points where the third curve meets it. Stabilizer C2 and genus-0 quotients assumed "
        "for the exceptional curves. Pre-resolution table: three rational curves fixed by sigma^4, not in standard form.",
    ),
    "3.9": ("C9", [9], [(3, 0, 1)], {}, [], ""),
    "1.B5": ("C10", [10], [(2, 0, 4), (5, 0, 1)], {}, [], "coprime stabilizer orders, genus-0 quotients: intersection points omitted"),
    "3.12": ("C12", [12], [(2, 0, 1), (3, 0, 1)], {}, [], "coprime stabilizer orders, genus-0 quotients: intersection points omitted"),
    "2.12": ("C12", [12], [(2, 0, 1), (3, 0, 1)], {}, [], "coprime stabilizer orders, genus-0 quotients: intersection points omitted"),
    "1.σρ2.2": ("C12", [12], [(2, 0, 4), (3, 0, 2)], {}, [], "coprime stabilizer orders, genus-0 quotients: intersection points omitted"),
    "2.G7": ("C14", [14], [(2, 0, 3)], {}, [], ""),
    "1.ρ5": ("C15", [15], [(3, 0, 2), (5, 0, 1)], {}, [], "coprime stabilizer orders, genus-0 quotients: intersection points omitted"),
    "2.G9": ("C18", [18], [(2, 0, 3), (3, 0, 1)], {}, [], "coprime stabilizer orders, genus-0 quotients: intersection points omitted"),
    "1.B10": (
        "C20", [20], [(2, 0, 0), (5, 0, 1)], {}, [],
        "[derived-input] post-resolution form. The resolution of the A4 point yields a tree of rational curves, "
        "so every residue cycle is trivial; the tree's exceptional curves and points are omitted. "
        "Pre-resolution table: z=0 (C2, genus 0) and y=0 (C5, genus 1) meeting non-transversally.",
    ),
    "1.σρ4": ("C24", [24], [(2, 0, 4), (3, 0, 2)], {}, [], "coprime stabilizer orders, genus-0 quotients: intersection points omitted"),
    "1.σρ5": ("C30", [30], [(2, 0, 4), (3, 0, 2), (5, 0, 1)], {}, [], "coprime stabilizer orders, genus-0 quotients: intersection points omitted"),
    # noncyclic
    "4.222": ("C2^3", [2, 2, 2], [(2, 0, 1)] * 3, {(1, 2): 2, (1, 3): 2, (2, 3): 2}, [2] * 4, ""),
    "4.2222": ("C2^4", [2, 2, 2, 2], [(2, 0, 1)] * 5, {(i, j): 1 for i in range(1, 6) for j in range(i + 1, 6)}, [2] * 6, ""),
    "4.42": ("C4xC2", [4, 2], [(2, 1, 1)], {}, [2] * 2, ""),
    "3.33.1": (
        "C3^2", [3, 3], [(3, 0, 1), (3, 0, 1)], {(1, 2): 3}, [3] * 2,
        "[derived-input] strata w=0 and z=0 (fixed by sigma_1 and sigma_2), elliptic with genus-0 quotients, "
        "meeting in the three points w=z=0, x^3+y^3=0, each its own orbit.",
    ),
    "3.33.2": ("C3^2", [3, 3], [(3, 1, 1)], {}, [3] * 2, ""),
    "3.36": ("C3xC6", [3, 6], [(2, 0, 1), (3, 0, 1), (3, 0, 1)], {(2, 3): 2}, [3], ""),
    "3.333": (
        "C3^3", [3, 3, 3], [(3, 0, 1)] * 4, {(i, j): 1 for i in range(1, 5) for j in range(i + 1, 5)}, [3] * 3,
        "[derived-input] strata w=0, x=0, y=0, z=0 (each fixed by a C3), genus-0 quotients; each pair meets in "
        "three points forming one orbit.",
    ),
    "2.G2": ("C2^2", [2, 2], [(2, 1, 3), (2, 0, 1)], {(1, 2): 4}, [2] * 5, ""),
    "2.G4.1": ("C2xC4", [2, 4], [(2, 0, 3), (4, 0, 1)], {(1, 2): 4}, [2] * 3, ""),
    "2.G4.2": ("C2xC4", [2, 4], [(2, 1, 3), (2, 0, 1)], {(1, 2): 2}, [2] * 3, ""),
    "2.G6": ("C2xC6", [2, 6], [(2, 0, 3), (2, 0, 1), (3, 0, 1)], {(1, 2): 2}, [2], "intersections with the C3 stratum cannot contribute and are omitted"),
    "2.G8": ("C2xC8", [2, 8], [(2, 0, 3), (4, 0, 1)], {(1, 2): 3}, [2] * 2, ""),
    "2.G12": ("C2xC12", [2, 12], [(2, 0, 3), (3, 0, 1), (4, 0, 1)], {(1, 3): 2}, [2], "intersections with the C3 stratum cannot contribute and are omitted"),
    "2.G22": ("C2^3", [2, 2, 2], [(2, 0, 3), (2, 0, 1), (2, 0, 1), (2, 0, 1)],
              {(1, 2): 2, (1, 3): 2, (1, 4): 2, (2, 3): 1, (2, 4): 1, (3, 4): 1}, [2] * 6, ""),
    "2.G24": ("C2^2xC4", [2, 2, 4], [(2, 0, 3), (2, 0, 1), (2, 0, 1), (4, 0, 1)],
              {(1, 4): 2, (1, 2): 1, (1, 3): 1, (2, 3): 1, (2, 4): 1, (3, 4): 1}, [2] * 4, ""),
    "2.G44": ("C2xC4^2", [2, 4, 4], [(2, 0, 3), (4, 0, 1), (4, 0, 1), (4, 0, 1)],
              {(i, j): 1 for i in range(1, 5) for j in range(i + 1, 5)}, [2, 2, 4], ""),
    "2.24.1": ("C2xC4", [2, 4], [(2, 0, 1), (2, 0, 1), (4, 0, 1)], {(1, 3): 2, (2, 3): 2, (1, 2): 1}, [2] * 3, ""),
    "2.24.2": ("C2xC4", [2, 4], [(4, 1, 1)], {}, [4] * 2, ""),
    "2.44.1": ("C4^2", [4, 4], [(2, 0, 1), (4, 0, 1), (4, 0, 1)], {(1, 2): 1, (1, 3): 1, (2, 3): 2}, [2, 4], ""),
    "2.44.2": ("C4^2", [4, 4], [(2, 0, 1), (4, 0, 1), (4, 0, 1)], {(1, 2): 1, (1, 3): 1, (2, 3): 1}, [2], ""),
    "1.B2.1": ("C2^2", [2, 2], [(2, 1, 4), (2, 0, 1)], {(1, 2): 3}, [2] * 4, ""),
    "1.σρ2.1": ("C6xC2", [6, 2], [(2, 0, 4), (2, 0, 1), (3, 0, 2)], {(1, 2): 1}, [], "intersections with the C3 stratum cannot contribute and are omitted"),
    "1.σρ3": ("C6xC3", [6, 3], [(2, 0, 4), (3, 0, 1), (3, 0, 1), (3, 0, 2)], {(2, 3): 1, (2, 4): 1, (3, 4): 1}, [3], ""),
    "1.ρ3": ("C3^2", [3, 3], [(3, 0, 2), (3, 0, 1), (3, 0, 1)], {(1, 2): 2, (1, 3): 2, (2, 3): 1}, [3] * 3, ""),
    "1.B4.1": ("C2xC4", [2, 4], [(2, 0, 4), (2, 0, 1), (4, 0, 1)], {(1, 2): 2, (1, 3): 3, (2, 3): 1}, [2] * 4, ""),
    "1.B6.1": ("C2xC6", [2, 6], [(2, 0, 4), (2, 0, 1), (6, 0, 1)], {(1, 3): 3, (1, 2): 1, (2, 3): 1}, [2] * 3, ""),
    "1.σρ6": ("C6^2", [6, 6], [(2, 0, 4), (3, 0, 2), (6, 0, 1), (6, 0, 1)],
              {(1, 4): 3, (1, 3): 1, (2, 3): 1, (2, 4): 1, (3, 4): 1}, [2, 2, 6], ""),
    "1.ρ6": ("C3xC6", [3, 6], [(3, 0, 2), (3, 0, 1), (6, 0, 1)], {(1, 3): 2, (1, 2): 1, (2, 3): 1}, [3] * 2, ""),
    "1.B6.2": ("C2xC6", [2, 6], [(2, 1, 4), (2, 0, 1), (2, 0, 1)], {(1, 2): 1, (1, 3): 1, (2, 3): 1}, [2] * 3, ""),
    "1.B12": ("C2xC12", [2, 12], [(2, 0, 4), (4, 0, 1), (6, 0, 1)], {(1, 3): 2, (1, 2): 1, (2, 3): 1}, [2] * 2, ""),
}


def strat_case(label, group, orders, strata, pij, expected, notes):
    s = [
        {"id": f"xi{i}", "stabilizer_order": m, "quotient_genus": gq, "genus": g}
        for i, (m, gq, g) in enumerate(strata, start=1)
    ]
    points = []
    for (i, j), count in sorted(pij.items()):
        for k in range(1, count + 1):
            points.append({
                "id": f"p{i}{j}_{k}",
                "incidences": [{"stratum": f"xi{i}", "multiplicity": 1}, {"stratum": f"xi{j}", "multiplicity": 1}],
            })
    out = {
        "label": label,
        "group": {"name": group, "cyclic_orders": orders},
        "strata": s,
        "points": points,
        "standard_form": True,
        "expected_brauer": expected,
    }
    if notes:
        out["notes"] = notes
    return out


def families():
    out = {}
    for n in (2, 3, 5):
        out[f"0.n_n{n}"] = ("C%d" % n, [n], [(n, 0, 0)], {}, [], "linear action with weights (1,1,zeta_n): a fixed line with genus-0 quotient")
    for g in (1, 2, 3):
        out[f"C.2_g{g}"] = ("C2", [2], [(2, g, g)], {}, [2] * (2 * g), f"fixed hyperelliptic curve of genus {g}")
    # conic-bundle roots: r = (2g+2)/m, quotient genus (r-2)/2, (r-1)/2, r/2 for s = 4, 2, 0
    reps = {
        "C.ro.m": [(4, 3, 5), (2, 2, 4), (0, 3, 8)],
        "C.re.m": [(4, 2, 7), (2, 4, 9), (0, 2, 5)],
    }
    for fam, rows in reps.items():
        for s, m, g in rows:
            r = (2 * g + 2) // m
            assert r * m == 2 * g + 2
            gq = {4: (r - 2) // 2, 2: (r - 1) // 2, 0: r // 2}[s]
            exp_rank = {4: r - 2, 2: r - 1, 0: r}[s]
            assert 2 * gq == exp_rank
            out[f"{fam}_s{s}_m{m}_g{g}"] = (
                f"C{2 * m}", [2 * m], [(2, gq, g)], {}, [2] * exp_rank,
                f"sigma^{m} fixes a hyperelliptic curve of genus {g}; s={s} fixed points of sigma on it, r={r}",
            )
    for n, m in ((4, 6), (3, 3), (2, 5)):
        out[f"0.mn_n{n}_m{m}"] = (
            f"C{n}xC{m}", [n, m], [(n, 0, 0), (n, 0, 0), (m, 0, 0), (m, 0, 0)],
            {(1, 3): 1, (1, 4): 1, (2, 3): 1, (2, 4): 1},
            [gcd(n, m)] if gcd(n, m) > 1 else [],
            "P1xP1 with the two coordinate lines of each ruling fixed; stratification twin of the Amitsur entry",
        )
    return out


# label: (group name, cyclic orders, Amitsur generators in the pairwise Schur basis, expected, notes)
AMITSUR = {
    "P1.22n_n2": ("C2xC4", [2, 4], [[1]], [], "O(1,0) not linearizable: Am = Z/2"),
    "P1.22n_n3": ("C2xC6", [2, 6], [[1]], [], "O(1,0) not linearizable: Am = Z/2"),
    "P1.222n_n2": ("C2^2xC4", [2, 2, 4], [[1, 0, 0]], [2, 2], "O(1,0) not linearizable: Am = Z/2"),
    "P1.222n_n3": ("C2^2xC6", [2, 2, 6], [[1, 0, 0]], [2, 2], "O(1,0) not linearizable: Am = Z/2"),
    "P1.22.1": ("C2^2", [2, 2], [[1]], [], "O(1,0) not linearizable: Am = Z/2"),
    "P1.222": ("C2^3", [2, 2, 2], [[1, 0, 0]], [2, 2], "O(1,0) not linearizable: Am = Z/2"),
    "P1.2222": ("C2^4", [2, 2, 2, 2], [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0]], [2] * 4, "neither ruling linearizable: Am = (Z/2)^2"),
    "P1s.24": ("C2xC4", [2, 4], [[1]], [], "O(1,1) not linearizable: Am = Z/2"),
    "P1s.222": ("C2^3", [2, 2, 2], [], [2] * 3, "O(1,1) linearizable: Am = 0"),
    "0.V9": ("C3^2", [3, 3], [[1]], [], "O(1) not linearizable: Am = Z/3"),
    "0.mn_n4_m6.am": ("C4xC6", [4, 6], [], [2], "both rulings linearizable: Am = 0"),
    "0.mn_n3_m3.am": ("C3xC3", [3, 3], [], [3], "both rulings linearizable: Am = 0"),
    "0.mn_n2_m5.am": ("C2xC5", [2, 5], [], [], "both rulings linearizable: Am = 0"),
}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for old in OUT.glob("*.json"):
        old.unlink()
    entries = dict(STRAT)
    entries.update(families())
    for label, (group, orders, strata, pij, expected, notes) in sorted(entries.items()):
        doc = strat_case(label, group, orders, strata, pij, expected, notes)
        (OUT / f"{label}.json").write_text(json.dumps(doc, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    for label, (group, orders, gens, expected, notes) in sorted(AMITSUR.items()):
        doc = {
            "label": label,
            "group": {"name": group, "cyclic_orders": orders},
            "amitsur_generators": gens,
            "expected_brauer": expected,
            "notes": notes,
        }
        (OUT / f"{label}.json").write_text(json.dumps(doc, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    print(f"wrote {len(entries) + len(AMITSUR)} entries to {OUT}")


if __name__ == "__main__":
    main()
