"""Sparse multivariate polynomials and rational functions over Q.

Terms are kept in a dict from exponent tuples to nonzero Fractions.  Every
polynomial carries its ordered variable list; binary operations first merge
the two lists (left operand's order first).  Rendering and leading terms use
graded lexicographic order.

GCDs follow the recursive primitive remainder sequence: split off the
content with respect to the first variable present, run the pseudo-remainder
sequence on the primitive parts taking primitive parts at every step, and
recombine.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce
from math import gcd as igcd, lcm as ilcm
from typing import Iterable, Mapping, Sequence, Union

Exps = tuple[int, ...]
Number = Union[int, Fraction]


class PolynomialError(ArithmeticError):
    pass


def _merge_vars(a: Sequence[str], b: Sequence[str]) -> tuple[str, ...]:
    out = list(a)
    out += [v for v in b if v not in a]
    return tuple(out)


def _grlex_key(e: Exps) -> tuple[int, Exps]:
    return (sum(e), e)


class MultiPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, variables: Iterable[str], terms: Mapping[Exps, Number] | None = None):
        self.vars: tuple[str, ...] = tuple(variables)
        clean: dict[Exps, Fraction] = {}
        n = len(self.vars)
        for e, c in (terms or {}).items():
            if len(e) != n:
                raise PolynomialError(f"exponent {e} does not match variables {self.vars}")
            c = Fraction(c)
            if c:
                clean[tuple(e)] = c
        self.terms = clean

    # -- constructors -----------------------------------------------------

    @classmethod
    def constant(cls, c: Number, variables: Iterable[str] = ()) -> "MultiPoly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def variable(cls, name: str, variables: Iterable[str] | None = None) -> "MultiPoly":
        variables = tuple(variables) if variables is not None else (name,)
        if name not in variables:
            variables = variables + (name,)
        i = variables.index(name)
        return cls(variables, {tuple(int(j == i) for j in range(len(variables))): 1})

    # -- variable bookkeeping --------------------------------------------

    def with_vars(self, variables: Sequence[str]) -> "MultiPoly":
        """Re-express in the given variable list, which must contain every variable in use."""
        variables = tuple(variables)
        if variables == self.vars:
            return self
        pos = []
        for i, v in enumerate(self.vars):
            if v in variables:
                pos.append(variables.index(v))
            else:
                if any(e[i] for e in self.terms):
                    raise PolynomialError(f"variable {v} is in use and cannot be dropped")
                pos.append(None)
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(variables)
            for i, k in enumerate(e):
                if pos[i] is not None:
                    ne[pos[i]] = k
            out[tuple(ne)] = c
        return MultiPoly(variables, out)

    def _align(self, other: "MultiPoly | Number") -> tuple["MultiPoly", "MultiPoly"]:
        if not isinstance(other, MultiPoly):
            return self, MultiPoly.constant(other, self.vars)
        if other.vars == self.vars:
            return self, other
        vs = _merge_vars(self.vars, other.vars)
        return self.with_vars(vs), other.with_vars(vs)

    def used_vars(self) -> list[str]:
        return [v for i, v in enumerate(self.vars) if any(e[i] for e in self.terms)]

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise PolynomialError("polynomial is not constant")
        return next(iter(self.terms.values()), Fraction(0))

    def degree(self, var: str) -> int:
        """Degree in ``var``; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if var not in self.vars:
            return 0
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def leading_exps(self) -> Exps:
        return max(self.terms, key=_grlex_key)

    def leading_coefficient(self) -> Fraction:
        return self.terms[self.leading_exps()] if self.terms else Fraction(0)

    def coeffs_in(self, var: str) -> dict[int, "MultiPoly"]:
        """Coefficients of the powers of ``var`` (as polynomials free of ``var``)."""
        if var not in self.vars:
            return {0: self} if self.terms else {}
        i = self.vars.index(var)
        buckets: dict[int, dict[Exps, Fraction]] = {}
        for e, c in self.terms.items():
            ne = e[:i] + (0,) + e[i + 1:]
            buckets.setdefault(e[i], {})[ne] = c
        return {k: MultiPoly(self.vars, t) for k, t in buckets.items()}

    def leading_coeff_in(self, var: str) -> "MultiPoly":
        return self.coeffs_in(var)[self.degree(var)]

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        a, b = self._align(other)
        out = dict(a.terms)
        for e, c in b.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(a.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, MultiPoly) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = Fraction(other)
            return MultiPoly(self.vars, {e: v * c for e, v in self.terms.items()})
        a, b = self._align(other)
        out: dict[Exps, Fraction] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(a.vars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise PolynomialError("negative power of a polynomial")
        result = MultiPoly.constant(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(other, self.vars)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._align(other)
        return a.terms == b.terms

    def __hash__(self):
        return hash(frozenset(self.with_vars(sorted(self.used_vars())).terms.items()))

    def scale_monomial(self, exps: Exps, c: Number) -> "MultiPoly":
        c = Fraction(c)
        return MultiPoly(self.vars, {tuple(x + y for x, y in zip(e, exps)): v * c for e, v in self.terms.items()})

    def diff(self, var: str) -> "MultiPoly":
        if var not in self.vars:
            return MultiPoly(self.vars)
        i = self.vars.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                out[e[:i] + (e[i] - 1,) + e[i + 1:]] = c * e[i]
        return MultiPoly(self.vars, out)

    def substitute(self, mapping: Mapping[str, "MultiPoly"]) -> "MultiPoly":
        """Simultaneous polynomial substitution; unmapped variables stay."""
        vs = self.vars
        for p in mapping.values():
            vs = _merge_vars(vs, p.vars)
        kept = [v for v in vs if v not in mapping or any(v in p.used_vars() for p in mapping.values())]
        result = MultiPoly(vs)
        powers: dict[tuple[str, int], MultiPoly] = {}
        for e, c in self.terms.items():
            term = MultiPoly.constant(c, vs)
            for v, k in zip(self.vars, e):
                if not k:
                    continue
                if v in mapping:
                    key = (v, k)
                    if key not in powers:
                        powers[key] = mapping[v].with_vars(vs) ** k
                    term = term * powers[key]
                else:
                    term = term * MultiPoly.variable(v, vs) ** k
            result = result + term
        return result.with_vars(kept) if set(result.used_vars()) <= set(kept) else result

    # -- division ---------------------------------------------------------

    def divmod(self, other: "MultiPoly") -> tuple["MultiPoly", "MultiPoly"]:
        """Division by one polynomial in grlex order; remainder is zero iff ``other`` divides ``self``."""
        a, b = self._align(other)
        if not b.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        lb = b.leading_exps()
        cb = b.terms[lb]
        rem = dict(a.terms)
        quot: dict[Exps, Fraction] = {}
        out_rem: dict[Exps, Fraction] = {}
        while rem:
            le = max(rem, key=_grlex_key)
            c = rem[le]
            diff = tuple(x - y for x, y in zip(le, lb))
            if min(diff, default=0) < 0:
                out_rem[le] = c
                del rem[le]
                continue
            q = c / cb
            quot[diff] = quot.get(diff, 0) + q
            for e, v in b.terms.items():
                ne = tuple(x + y for x, y in zip(e, diff))
                nv = rem.get(ne, 0) - q * v
                if nv:
                    rem[ne] = nv
                else:
                    rem.pop(ne, None)
        return MultiPoly(a.vars, quot), MultiPoly(a.vars, out_rem)

    def exact_div(self, other: "MultiPoly") -> "MultiPoly":
        q, r = self.divmod(other)
        if r:
            raise PolynomialError("division is not exact")
        return q

    def divides(self, other: "MultiPoly") -> bool:
        """True when self divides other."""
        return not other.divmod(self)[1]

    def __floordiv__(self, other):
        if not isinstance(other, MultiPoly):
            return self * (1 / Fraction(other))
        return self.exact_div(other)

    # -- normal forms -----------------------------------------------------

    def primitive_integer(self) -> tuple[Fraction, "MultiPoly"]:
        """(c, p) with self = c * p, p having coprime integer coefficients and positive leading coefficient."""
        if not self.terms:
            return Fraction(0), self
        den = reduce(ilcm, (c.denominator for c in self.terms.values()), 1)
        num = reduce(igcd, (abs(c.numerator * (den // c.denominator)) for c in self.terms.values()), 0)
        c = Fraction(num, den)
        if self.leading_coefficient() < 0:
            c = -c
        return c, self * (1 / c)

    def normalized(self) -> "MultiPoly":
        return self.primitive_integer()[1]

    # -- rendering --------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                (v if k == 1 else f"{v}^{k}") for v, k in zip(self.vars, e) if k
            )
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"MultiPoly({str(self)!r}, vars={self.vars})"


# --------------------------------------------------------------------------
# univariate views, pseudo-division, GCD


def from_coeffs_in(var: str, coeffs: Mapping[int, MultiPoly], variables: Sequence[str]) -> MultiPoly:
    x = MultiPoly.variable(var, variables)
    out = MultiPoly(tuple(variables) if var in variables else tuple(variables) + (var,))
    for k, c in coeffs.items():
        out = out + c * x**k
    return out


def pseudo_reduce(f: MultiPoly, g: MultiPoly, var: str) -> tuple[MultiPoly, int]:
    """(r, k) with lc^k * f = r mod g and deg_var r < deg_var g, where lc is g's leading coefficient in ``var``.

    k counts the reduction steps actually taken.
    """
    f, g = f._align(g)
    dg = g.degree(var)
    if dg < 1:
        raise PolynomialError(f"{g} does not involve {var}")
    lc = g.leading_coeff_in(var)
    x = MultiPoly.variable(var, f.vars)
    r, k = f, 0
    lc_const = lc.is_constant()
    while r and r.degree(var) >= dg:
        dr = r.degree(var)
        lr = r.leading_coeff_in(var)
        if lc_const:
            r = r - (lr * (1 / lc.constant_value())) * x ** (dr - dg) * g
        else:
            r = lc * r - lr * x ** (dr - dg) * g
            k += 1
    return r, k


def prem(f: MultiPoly, g: MultiPoly, var: str) -> MultiPoly:
    return pseudo_reduce(f, g, var)[0]


def content_in(f: MultiPoly, var: str) -> MultiPoly:
    """GCD of the coefficients of f viewed as a polynomial in ``var`` (normalized)."""
    coeffs = list(f.coeffs_in(var).values())
    if not coeffs:
        return MultiPoly(f.vars)
    g = coeffs[0]
    for c in coeffs[1:]:
        g = poly_gcd(g, c)
        if g.is_constant():
            break
    return g.normalized().with_vars(f.vars)


def primitive_in(f: MultiPoly, var: str) -> MultiPoly:
    if not f:
        return f
    return f.exact_div(content_in(f, var)).normalized()


def poly_gcd(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Greatest common divisor with coprime integer coefficients and positive leading coefficient."""
    f, g = f._align(g)
    if not f:
        return g.normalized()
    if not g:
        return f.normalized()
    if f.is_constant() or g.is_constant():
        return MultiPoly.constant(1, f.vars)
    used = set(f.used_vars()) | set(g.used_vars())
    var = next(v for v in f.vars if v in used)
    if f.degree(var) == 0:
        return poly_gcd(f, content_in(g, var))
    if g.degree(var) == 0:
        return poly_gcd(content_in(f, var), g)
    cf, cg = content_in(f, var), content_in(g, var)
    c = poly_gcd(cf, cg)
    a, b = f.exact_div(cf), g.exact_div(cg)
    if a.degree(var) < b.degree(var):
        a, b = b, a
    while b:
        r = prem(a, b, var)
        a = b
        b = primitive_in(r, var) if r and r.degree(var) > 0 else (MultiPoly(f.vars) if not r else MultiPoly.constant(1, f.vars))
        if b and b.degree(var) == 0:
            a = b
            break
    h = primitive_in(a, var) if a.degree(var) > 0 else MultiPoly.constant(1, f.vars)
    return (c * h).normalized()


def odd_part(f: MultiPoly) -> MultiPoly:
    """Product of the irreducible factors of f that occur to an odd power (normalized)."""
    if not f:
        raise PolynomialError("odd part of zero")
    f = f.normalized()

    def dgcd(p: MultiPoly) -> MultiPoly:
        g = p
        for v in p.used_vars():
            g = poly_gcd(g, p.diff(v))
        return g

    # D_k = prod p^max(e-k, 0);  R_k = D_{k-1} / D_k = prod_{e >= k} p
    D = [f]
    while not D[-1].is_constant():
        D.append(dgcd(D[-1]))
    R = [None] + [D[k - 1].exact_div(D[k]) for k in range(1, len(D))]
    out = MultiPoly.constant(1, f.vars)
    for k in range(1, len(R), 2):
        nxt = R[k + 1] if k + 1 < len(R) else MultiPoly.constant(1, f.vars)
        out = out * R[k].exact_div(nxt)
    return out.normalized()


def is_square_poly(f: MultiPoly) -> MultiPoly | None:
    """A polynomial s with s^2 = c f for some nonzero rational c, or None.

    Constants are absorbed into c, so the leading coefficient is first
    scaled to 1; the root is then built term by term in grlex order.
    """
    if not f:
        return MultiPoly(f.vars)
    lead = f.leading_exps()
    if any(k % 2 for k in lead):
        return None
    target = f * (1 / f.terms[lead])
    lt = tuple(k // 2 for k in lead)
    root = MultiPoly(f.vars, {lt: 1})
    rem = target - root * root
    while rem:
        le = rem.leading_exps()
        diff = tuple(x - y for x, y in zip(le, lt))
        if min(diff) < 0:
            return None
        t = MultiPoly(f.vars, {diff: rem.terms[le] / 2})
        if t.leading_exps() == lt or _grlex_key(diff) >= _grlex_key(lt):
            return None
        root = root + t
        rem = target - root * root
    return root


# --------------------------------------------------------------------------
# rational functions


class RatFunc:
    """A reduced fraction num/den of polynomials with den normalized (coprime integer coefficients, positive lead)."""

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly | None = None, *, reduce_: bool = True):
        if den is None:
            den = MultiPoly.constant(1, num.vars)
        num, den = num._align(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if reduce_ and num:
            g = poly_gcd(num, den)
            if not g.is_constant():
                num, den = num.exact_div(g), den.exact_div(g)
        if not num:
            den = MultiPoly.constant(1, num.vars)
        c, den = den.primitive_integer()
        self.num = num * (1 / c)
        self.den = den

    @classmethod
    def from_poly(cls, p: MultiPoly) -> "RatFunc":
        return cls(p, reduce_=False)

    @classmethod
    def constant(cls, c: Number, variables: Iterable[str] = ()) -> "RatFunc":
        return cls(MultiPoly.constant(c, variables), reduce_=False)

    @property
    def vars(self) -> tuple[str, ...]:
        return self.num.vars

    def with_vars(self, variables: Sequence[str]) -> "RatFunc":
        return RatFunc(self.num.with_vars(variables), self.den.with_vars(variables), reduce_=False)

    def _coerce(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, MultiPoly):
            return RatFunc.from_poly(other)
        return RatFunc.constant(other, self.vars)

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Fraction:
        return self.num.constant_value() / self.den.constant_value()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def __add__(self, other):
        o = self._coerce(other)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduce_=False)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num, reduce_=False)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "RatFunc":
        if k < 0:
            return RatFunc(self.den**-k, self.num**-k, reduce_=False)
        return RatFunc(self.num**k, self.den**k, reduce_=False)

    def __eq__(self, other) -> bool:
        o = self._coerce(other) if not isinstance(other, RatFunc) else other
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self) -> str:
        if self.den.is_constant() and self.den.constant_value() == 1:
            return str(self.num)
        n = str(self.num)
        if len(self.num.terms) > 1 or "/" in n:
            n = f"({n})"
        d = str(self.den)
        if len(self.den.terms) > 1 or ("*" in d and not self.den.is_constant()):
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self) -> str:
        return f"RatFunc({str(self)!r}, vars={self.vars})"


# --------------------------------------------------------------------------
# parsing:  integers, variables, + - * / ^ (or **), parentheses

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


class ParseError(ValueError):
    pass


def _tokenize(text: str) -> list[tuple[str, str]]:
    pos, out = 0, []
    text = text.replace("−", "-").replace("·", "*")
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character at {pos} in {text!r}")
        if m.group(1):
            out.append(("num", m.group(1)))
        elif m.group(2):
            out.append(("var", m.group(2)))
        else:
            op = m.group(3)
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


def parse_ratfunc(text: str, variables: Sequence[str], definitions: Mapping[str, str] | None = None) -> RatFunc:
    """Parse an expression such as ``-y1*y4 + y1*y2 - (y2 - y4)^2/3`` over the given variables.

    ``definitions`` maps extra names to expressions that are expanded in place
    (parenthesized) wherever the name occurs.
    """
    tokens = _tokenize(text)
    variables = tuple(variables)
    definitions = definitions or {}
    i = 0

    def peek():
        return tokens[i] if i < len(tokens) else (None, None)

    def take():
        nonlocal i
        tok = peek()
        i += 1
        return tok

    def expr() -> RatFunc:
        sign = 1
        while peek() in (("op", "+"), ("op", "-")):
            if take()[1] == "-":
                sign = -sign
        value = term()
        if sign < 0:
            value = -value
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            rhs = term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term() -> RatFunc:
        value = power()
        while peek() in (("op", "*"), ("op", "/")):
            op = take()[1]
            rhs = power()
            if op == "*":
                value = value * rhs
            else:
                if not rhs:
                    raise ParseError(f"division by zero in {text!r}")
                value = value / rhs
        return value

    def power() -> RatFunc:
        base = unary()
        if peek() == ("op", "^"):
            take()
            kind, tok = take()
            neg = False
            if (kind, tok) == ("op", "-"):
                neg = True
                kind, tok = take()
            if kind != "num":
                raise ParseError(f"exponent must be an integer literal in {text!r}")
            k = int(tok)
            base = base ** (-k if neg else k)
        return base

    def unary() -> RatFunc:
        if peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            v = unary()
            return -v if op == "-" else v
        return atom()

    def atom() -> RatFunc:
        kind, tok = take()
        if kind == "num":
            return RatFunc.constant(int(tok), variables)
        if kind == "var":
            if tok in definitions and tok not in variables:
                inner = {k: v for k, v in definitions.items() if k != tok}
                return parse_ratfunc(definitions[tok], variables, inner)
            if tok not in variables:
                raise ParseError(f"unknown variable {tok!r} (declared: {', '.join(variables)})")
            return RatFunc.from_poly(MultiPoly.variable(tok, variables))
        if (kind, tok) == ("op", "("):
            v = expr()
            if take() != ("op", ")"):
                raise ParseError(f"unbalanced parentheses in {text!r}")
            return v
        raise ParseError(f"unexpected token {tok!r} in {text!r}")

    if not tokens:
        raise ParseError("empty expression")
    result = expr()
    if i != len(tokens):
        raise ParseError(f"trailing input after position {i} in {text!r}")
    return result


def parse_poly(text: str, variables: Sequence[str], definitions: Mapping[str, str] | None = None) -> MultiPoly:
    r = parse_ratfunc(text, variables, definitions)
    if not r.is_polynomial():
        raise ParseError(f"{text!r} is not a polynomial")
    return r.num * (1 / r.den.constant_value())
