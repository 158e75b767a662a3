"""Residues of degree-2 symbols with Z/2 coefficients at divisorial valuations.

For a discrete valuation v and a symbol (a, b) the residue is the square
class of

    (-1)^(v(a) v(b)) * a^v(b) * b^(-v(a))

in the residue field.  Everything here works with exact rational
functions: a valuation is given by a generator polynomial (assumed
irreducible, or a single orbit of components) and a main variable, and
residue fields are reached either by substituting the solved main variable
(generator linear in it) or by pseudo-division.

Square classes are decided only when a certificate exists:

* rational-field mode: generator linear in its main variable, so the
  residue field is purely transcendental and a class is trivial iff every
  irreducible factor of numerator * denominator appears to an even power;
* quadratic-extension mode: the residue field contains k(t)(sqrt d) and the
  class is pulled back from k(t);
* witness mode: an explicit square root modulo a relation.

Anything else comes back Unknown.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Mapping, Sequence

from .poly import MultiPoly, PolynomialError, RatFunc, is_square_poly, odd_part, pseudo_reduce


class ResidueError(ValueError):
    pass


class UndefinedValuation(ResidueError):
    pass


class DegenerateChart(ResidueError):
    pass


class PreconditionError(ResidueError):
    pass


class SquareClass(str, Enum):
    TRIVIAL = "Trivial"
    NONTRIVIAL = "Nontrivial"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Valuation:
    generator: MultiPoly
    main_variable: str

    def __post_init__(self):
        if self.generator.is_constant():
            raise PreconditionError("valuation generator must be nonconstant")
        if self.generator.degree(self.main_variable) < 1:
            raise PreconditionError(f"{self.main_variable} does not occur in {self.generator}")

    @property
    def is_linear(self) -> bool:
        return self.generator.degree(self.main_variable) == 1


@dataclass(frozen=True)
class Symbol:
    a: RatFunc
    b: RatFunc

    def __post_init__(self):
        if not self.a or not self.b:
            raise ResidueError("symbol entries must be nonzero")


@dataclass(frozen=True)
class ChartMap:
    """Simultaneous substitution into the listed target variables."""

    substitutions: Mapping[str, RatFunc]
    variables: tuple[str, ...]

    @classmethod
    def identity(cls, variables: Sequence[str]) -> "ChartMap":
        return cls({}, tuple(variables))


@dataclass(frozen=True)
class ResidueReport:
    v_a: int
    v_b: int
    representative: RatFunc
    multiplier_square_class: SquareClass
    verdict: SquareClass

    def to_json(self) -> dict[str, Any]:
        return {
            "v_a": self.v_a,
            "v_b": self.v_b,
            "representative": str(self.representative),
            "multiplier_square_class": self.multiplier_square_class.value,
            "verdict": self.verdict.value,
        }


# --------------------------------------------------------------------------
# valuations and substitutions


def _poly_valuation(p: MultiPoly, g: MultiPoly) -> int:
    if not p:
        raise UndefinedValuation("valuation of zero")
    k = 0
    while True:
        q, r = p.divmod(g)
        if r:
            return k
        p, k = q, k + 1


def valuation_of(f: RatFunc, v: Valuation) -> int:
    """Order of vanishing of f along the generator of v."""
    if not f:
        raise UndefinedValuation("valuation of zero")
    return _poly_valuation(f.num, v.generator) - _poly_valuation(f.den, v.generator)


def first_residue(f: RatFunc, v: Valuation) -> int:
    return valuation_of(f, v) % 2


def _substitute_poly(p: MultiPoly, mapping: Mapping[str, RatFunc], variables: Sequence[str]) -> RatFunc:
    """p with each mapped variable replaced, over a single common denominator."""
    variables = tuple(variables)
    degs = {v: p.degree(v) for v in mapping if v in p.vars}
    nums = {v: mapping[v].num.with_vars(variables) for v in degs}
    dens = {v: mapping[v].den.with_vars(variables) for v in degs}
    total = MultiPoly(variables)
    for e, c in p.terms.items():
        term = MultiPoly.constant(c, variables)
        for var, k in zip(p.vars, e):
            if var in degs:
                term = term * nums[var] ** k * dens[var] ** (degs[var] - k)
            elif k:
                if var not in variables:
                    raise DegenerateChart(f"variable {var} is neither mapped nor a chart variable")
                term = term * MultiPoly.variable(var, variables) ** k
        total = total + term
    den = MultiPoly.constant(1, variables)
    for var, d in degs.items():
        den = den * dens[var] ** d
    return RatFunc(total, den)


def substitute(f: RatFunc, chart: ChartMap) -> RatFunc:
    """Apply a chart map to a rational function."""
    num = _substitute_poly(f.num, chart.substitutions, chart.variables)
    den = _substitute_poly(f.den, chart.substitutions, chart.variables)
    if not den:
        raise DegenerateChart(f"denominator {f.den} vanishes identically in the chart")
    return num / den


def solve_linear(relation: MultiPoly, var: str) -> RatFunc:
    """var = -c0/c1 for a relation c1*var + c0 = 0."""
    if relation.degree(var) != 1:
        raise PreconditionError(f"relation {relation} is not linear in {var}")
    coeffs = relation.coeffs_in(var)
    c1 = coeffs[1]
    c0 = coeffs.get(0, MultiPoly(relation.vars))
    return RatFunc(-c0, c1)


def restrict_linear(f: RatFunc, v: Valuation) -> RatFunc:
    """Image of a valuation-zero function in the residue field of a linear generator."""
    if not v.is_linear:
        raise PreconditionError(f"generator {v.generator} is not linear in {v.main_variable}")
    sol = solve_linear(v.generator, v.main_variable)
    target = tuple(x for x in _merge(f.vars, v.generator.vars) if x != v.main_variable)
    out = substitute(f, ChartMap({v.main_variable: sol}, target))
    if not out:
        raise UndefinedValuation(f"{f} vanishes along {v.generator}")
    return out


def _merge(a: Sequence[str], b: Sequence[str]) -> tuple[str, ...]:
    return tuple(a) + tuple(x for x in b if x not in a)


# --------------------------------------------------------------------------
# residues


def symbol_unit(sym: Symbol, v: Valuation) -> tuple[int, int, RatFunc]:
    """(v(a), v(b), u) with u = (-1)^(v(a) v(b)) a^v(b) b^(-v(a)), a unit at v."""
    va, vb = valuation_of(sym.a, v), valuation_of(sym.b, v)
    u = sym.a**vb * sym.b ** (-va)
    if (va * vb) % 2:
        u = -u
    return va, vb, u


def _is_square_ratfunc(f: RatFunc) -> bool:
    return f.is_constant() or is_square_poly(f.num * f.den) is not None


def residue_symbol(sym: Symbol, v: Valuation) -> ResidueReport:
    """Residue of (a, b) at v, reduced modulo the generator, with an automatic square-class verdict.

    A linear generator is handled by substituting the solved main variable;
    otherwise numerator and denominator are pseudo-divided separately and
    the leading-coefficient power left over is the multiplier.
    """
    va, vb, u = symbol_unit(sym, v)
    if v.is_linear:
        rep = restrict_linear(u, v)
        verdict = square_class_in_rational_field(rep, v)
        return ResidueReport(va, vb, rep, SquareClass.TRIVIAL, verdict)

    g, x = v.generator, v.main_variable
    rn, kn = pseudo_reduce(u.num, g, x)
    rd, kd = pseudo_reduce(u.den, g, x)
    if not rn or not rd:
        raise UndefinedValuation(f"residue representative vanishes along {g}")
    rep = RatFunc(rn, rd)
    lc = g.leading_coeff_in(x)
    e = kn - kd
    if e % 2 == 0 or lc.is_constant() or is_square_poly(lc) is not None:
        mult = SquareClass.TRIVIAL
    else:
        mult = SquareClass.UNKNOWN
    if mult is SquareClass.UNKNOWN:
        verdict = SquareClass.UNKNOWN
    elif _is_square_ratfunc(rep):
        verdict = SquareClass.TRIVIAL
    else:
        verdict = SquareClass.UNKNOWN
    return ResidueReport(va, vb, rep, mult, verdict)


# --------------------------------------------------------------------------
# square classes


def square_class_in_rational_field(f: RatFunc, v: Valuation) -> SquareClass:
    """Square class of f restricted to a divisor whose generator is linear in its main variable."""
    if not v.is_linear:
        raise PreconditionError(f"generator {v.generator} is not linear in {v.main_variable}; use witness mode")
    if v.main_variable in f.num.used_vars() or v.main_variable in f.den.used_vars():
        f = restrict_linear(f, v)
    if not f:
        raise UndefinedValuation("zero has no square class")
    return SquareClass.TRIVIAL if odd_part(f.num * f.den).is_constant() else SquareClass.NONTRIVIAL


def square_class_in_quadratic_extension(u: RatFunc, d: MultiPoly) -> SquareClass:
    """Square class of u in k(t)(sqrt d) for u in k(t): trivial iff u or u*d is a square in k(t)."""
    if is_square_poly(d) is not None:
        raise PreconditionError(f"{d} is a square; the extension is trivial")
    if _is_square_ratfunc(u) or _is_square_ratfunc(u * RatFunc.from_poly(d)):
        return SquareClass.TRIVIAL
    return SquareClass.NONTRIVIAL


def verify_square_witness(rep: RatFunc, witness: RatFunc, relation: MultiPoly | None, solved_variable: str | None) -> bool:
    """Does rep = c * witness^2 hold for a nonzero constant c once the relation is imposed?"""
    target = rep / (witness * witness)
    if relation is not None and relation:
        if solved_variable is None:
            raise PreconditionError("a solved variable is required with a relation")
        sol = solve_linear(relation, solved_variable)
        vs = tuple(x for x in _merge(target.vars, relation.vars) if x != solved_variable)
        target = substitute(target, ChartMap({solved_variable: sol}, vs))
    return bool(target) and target.is_constant()


# --------------------------------------------------------------------------
# per-divisor driver


@dataclass(frozen=True)
class RationalField:
    kind: str = "rational-field"


@dataclass(frozen=True)
class Auto:
    kind: str = "auto"


@dataclass(frozen=True)
class QuadraticExtension:
    """Residue field containing k(t)(sqrt d), with t = param in chart variables.

    ``curve`` optionally certifies d: substituting ``curve_substitution`` into
    the generator gives a polynomial quadratic in ``curve_variable`` whose
    discriminant must equal d up to a square.
    """

    param: RatFunc
    t: str
    u: RatFunc
    d: MultiPoly
    curve_substitution: Mapping[str, RatFunc] | None = None
    curve_variable: str | None = None
    kind: str = "quadratic-extension"


@dataclass(frozen=True)
class Witness:
    witness: RatFunc
    relation: MultiPoly | None
    solved_variable: str | None
    kind: str = "witness"


Strategy = RationalField | Auto | QuadraticExtension | Witness


@dataclass(frozen=True)
class DivisorSpec:
    name: str
    valuation: Valuation
    chart: ChartMap | None
    stabilizer_order: int
    strategy: Strategy
    symbol: Symbol | None = None


@dataclass(frozen=True)
class DivisorVerdict:
    name: str
    stabilizer_order: int
    strategy: str
    report: ResidueReport
    residue: SquareClass
    killed_by_stabilizer: bool
    passes: bool
    detail: str = ""

    def to_json(self) -> dict[str, Any]:
        out = {"divisor": self.name, "stabilizer_order": self.stabilizer_order, "strategy": self.strategy}
        out.update(self.report.to_json())
        out.update(
            residue=self.residue.value,
            killed_by_stabilizer=self.killed_by_stabilizer,
            passes=self.passes,
        )
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass(frozen=True)
class StackClassReport:
    divisors: tuple[DivisorVerdict, ...]

    @property
    def in_br(self) -> bool:
        return all(d.passes for d in self.divisors)

    @property
    def nonzero(self) -> bool:
        return any(d.residue is SquareClass.NONTRIVIAL for d in self.divisors)

    @property
    def unknown(self) -> list[str]:
        return [d.name for d in self.divisors if d.residue is SquareClass.UNKNOWN]

    @property
    def failing(self) -> list[str]:
        return [d.name for d in self.divisors if not d.passes]

    def summary(self) -> str:
        if not self.in_br:
            return "not certified in Br: fails at " + ", ".join(self.failing)
        return "certified: in Br, " + ("nonzero" if self.nonzero else "nonzero not certified")

    def to_json(self) -> dict[str, Any]:
        return {
            "divisors": [d.to_json() for d in self.divisors],
            "in_br": self.in_br,
            "nonzero": self.nonzero,
            "summary": self.summary(),
        }


def _quadratic_extension_class(rep: RatFunc, s: QuadraticExtension, v: Valuation) -> tuple[SquareClass, str]:
    notes = []
    pulled = substitute(s.u, ChartMap({s.t: s.param}, rep.vars))
    if not _is_square_ratfunc(rep / pulled):
        return SquareClass.UNKNOWN, "representative is not u(param) up to squares"
    if s.curve_substitution is not None:
        image = substitute(RatFunc.from_poly(v.generator), ChartMap(dict(s.curve_substitution), _curve_vars(s, v)))
        quad = image.num
        y = s.curve_variable
        if quad.degree(y) != 2:
            return SquareClass.UNKNOWN, f"curve equation is not quadratic in {y}"
        c = quad.coeffs_in(y)
        zero = MultiPoly(quad.vars)
        A, B, C = c.get(2, zero), c.get(1, zero), c.get(0, zero)
        disc = B * B - 4 * A * C
        d = s.d.with_vars(_merge(s.d.vars, disc.vars))
        if not _is_square_ratfunc(RatFunc(disc, d)):
            return SquareClass.UNKNOWN, f"discriminant {disc} differs from d by a nonsquare"
        notes.append(f"discriminant {disc}")
    verdict = square_class_in_quadratic_extension(s.u, s.d)
    notes.append(f"u = {s.u}, d = {s.d}")
    return verdict, "; ".join(notes)


def _curve_vars(s: QuadraticExtension, v: Valuation) -> tuple[str, ...]:
    kept = [x for x in v.generator.vars if x not in s.curve_substitution]
    return tuple(kept) + (s.t,)


def check_divisor(spec: DivisorSpec, sym: Symbol) -> DivisorVerdict:
    sym = spec.symbol or sym
    if spec.chart is not None:
        sym = Symbol(substitute(sym.a, spec.chart), substitute(sym.b, spec.chart))
    report = residue_symbol(sym, spec.valuation)
    s = spec.strategy
    detail = ""
    if isinstance(s, Auto):
        residue = report.verdict
    elif report.multiplier_square_class is SquareClass.UNKNOWN:
        residue, detail = SquareClass.UNKNOWN, "pseudo-division multiplier not certified"
    elif isinstance(s, RationalField):
        residue = square_class_in_rational_field(report.representative, spec.valuation)
    elif isinstance(s, QuadraticExtension):
        residue, detail = _quadratic_extension_class(report.representative, s, spec.valuation)
    elif isinstance(s, Witness):
        ok = verify_square_witness(report.representative, s.witness, s.relation, s.solved_variable)
        residue = SquareClass.TRIVIAL if ok else SquareClass.UNKNOWN
        detail = "witness identity holds" if ok else "witness identity fails"
    else:
        raise PreconditionError(f"unknown strategy {s!r}")
    killed = spec.stabilizer_order % 2 == 0
    passes = killed or residue is SquareClass.TRIVIAL
    return DivisorVerdict(spec.name, spec.stabilizer_order, s.kind, report, residue, killed, passes, detail)


def check_stack_class(divisors: Sequence[DivisorSpec], sym: Symbol) -> StackClassReport:
    """Check |I_D| * residue = 0 at each listed divisor (coefficients Z/2)."""
    return StackClassReport(tuple(check_divisor(d, sym) for d in divisors))
