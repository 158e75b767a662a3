"""Brauer groups of quotient stacks from stratification data, plus an exact symbol-residue engine."""

from .abelian import (
    AbelianGroup,
    InvalidInput,
    SNFResult,
    direct_sum,
    quotient_group,
    smith_normal_form,
    solution_group,
    torsion_part,
)
from .solver import (
    BrauerResult,
    SolutionSystem,
    brauer_from_amitsur,
    brute_force,
    build_system,
    schur_multiplier,
    solve,
)
from .strata import (
    GroupSpec,
    PointOrbit,
    StratificationCase,
    Stratum,
    load_case,
    parse_case,
    render_case,
    rh_quotient_genus,
    validate_case,
)

__all__ = [
    "AbelianGroup",
    "BrauerResult",
    "GroupSpec",
    "InvalidInput",
    "PointOrbit",
    "SNFResult",
    "SolutionSystem",
    "StratificationCase",
    "Stratum",
    "brauer_from_amitsur",
    "brute_force",
    "build_system",
    "direct_sum",
    "load_case",
    "parse_case",
    "quotient_group",
    "render_case",
    "rh_quotient_genus",
    "schur_multiplier",
    "smith_normal_form",
    "solution_group",
    "solve",
    "torsion_part",
    "validate_case",
]

__version__ = "0.1.0"
