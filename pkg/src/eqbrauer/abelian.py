"""Exact integer linear algebra and finite abelian groups.

Everything here works over Python integers, so entry growth during
pivoting never overflows.  Matrices are plain lists of rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import groupby
from math import gcd, prod
from typing import Iterable, Sequence

Matrix = list[list[int]]


class InvalidInput(ValueError):
    """Raised when an operation receives arguments outside its contract."""


@dataclass(frozen=True)
class AbelianGroup:
    """Finite abelian group stored by its invariant factors d1 | d2 | ... | dk.

    Unit factors never appear; the trivial group has no factors.  Use
    :meth:`from_orders` to build a group from an arbitrary list of cyclic
    orders.
    """

    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        factors = tuple(int(d) for d in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", factors)
        for d in factors:
            if d < 2:
                raise InvalidInput(f"invariant factor {d} < 2")
        for a, b in zip(factors, factors[1:]):
            if b % a:
                raise InvalidInput(f"invariant factors {factors} do not form a divisibility chain")

    @classmethod
    def from_orders(cls, orders: Iterable[int]) -> "AbelianGroup":
        """Normalize a direct sum of cyclic groups Z/n1 + Z/n2 + ... ."""
        orders = [abs(int(n)) for n in orders]
        if any(n == 0 for n in orders):
            raise InvalidInput("infinite cyclic factor in a finite group")
        return cls(tuple(d for d in _diagonal_invariants(orders) if d > 1))

    @classmethod
    def trivial(cls) -> "AbelianGroup":
        return cls(())

    @classmethod
    def cyclic(cls, n: int) -> "AbelianGroup":
        return cls.from_orders([n])

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    def is_trivial(self) -> bool:
        return not self.invariant_factors

    def to_list(self) -> list[int]:
        return list(self.invariant_factors)

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "0"
        parts = []
        for d, run in groupby(self.invariant_factors):
            e = len(list(run))
            parts.append(f"Z/{d}" if e == 1 else f"(Z/{d})^{e}")
        return " ⊕ ".join(parts)


@dataclass(frozen=True)
class SNFResult:
    """U * M * V = S with U, V unimodular and S diagonal."""

    U: Matrix
    S: Matrix
    V: Matrix

    @property
    def diagonal(self) -> list[int]:
        return [self.S[i][i] for i in range(min(len(self.S), len(self.V)))]


# --------------------------------------------------------------------------
# matrix helpers


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: Matrix, B: Matrix, inner: int | None = None) -> Matrix:
    """Product of integer matrices; ``inner`` gives the shared size when a side is empty."""
    if inner is None:
        inner = len(B) if B else (len(A[0]) if A else 0)
    cols = len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(A))]


def determinant(M: Matrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(map(int, row)) for row in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def _check_rectangular(M: Sequence[Sequence[int]]) -> tuple[int, int]:
    rows = len(M)
    cols = len(M[0]) if rows else 0
    for row in M:
        if len(row) != cols:
            raise InvalidInput("ragged matrix")
    return rows, cols


# --------------------------------------------------------------------------
# Smith normal form


def smith_normal_form(M: Sequence[Sequence[int]], cols: int | None = None) -> SNFResult:
    """Smith normal form with transforms.

    Pivots on the nonzero entry of least absolute value in the remaining
    block (first in row-major order on ties), clears its row and column,
    and repairs divisibility by folding offending rows into the pivot row.
    The pivot rule is deterministic, so ``U`` and ``V`` are reproducible.

    ``cols`` is only needed for matrices with zero rows.
    """
    rows, ncols = _check_rectangular(M)
    if rows == 0 and cols is not None:
        ncols = cols
    S = [list(map(int, row)) for row in M]
    U = identity(rows)
    V = identity(ncols)

    def swap_rows(i: int, j: int) -> None:
        if i != j:
            S[i], S[j] = S[j], S[i]
            U[i], U[j] = U[j], U[i]

    def swap_cols(i: int, j: int) -> None:
        if i != j:
            for row in S:
                row[i], row[j] = row[j], row[i]
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(src: int, dst: int, q: int) -> None:
        # row[dst] += q * row[src]
        if q:
            S[dst] = [a + q * b for a, b in zip(S[dst], S[src])]
            U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(src: int, dst: int, q: int) -> None:
        if q:
            for row in S:
                row[dst] += q * row[src]
            for row in V:
                row[dst] += q * row[src]

    for t in range(min(rows, ncols)):
        while True:
            pivot = None
            for i in range(t, rows):
                for j in range(t, ncols):
                    if S[i][j] and (pivot is None or abs(S[i][j]) < abs(S[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break
            swap_rows(t, pivot[0])
            swap_cols(t, pivot[1])
            p = S[t][t]
            clean = True
            for i in range(t + 1, rows):
                if S[i][t]:
                    add_row(t, i, -(S[i][t] // p))
                    clean = clean and S[i][t] == 0
            for j in range(t + 1, ncols):
                if S[t][j]:
                    add_col(t, j, -(S[t][j] // p))
                    clean = clean and S[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, ncols) if S[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(bad, t, 1)
        if pivot is None:
            break
        if S[t][t] < 0:
            S[t] = [-a for a in S[t]]
            U[t] = [-a for a in U[t]]
    return SNFResult(U, S, V)


def _diagonal_invariants(orders: Sequence[int]) -> list[int]:
    n = len(orders)
    if n == 0:
        return []
    D = [[orders[i] if i == j else 0 for j in range(n)] for i in range(n)]
    return smith_normal_form(D).diagonal


def invariant_factors(M: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero diagonal entries of the Smith form of ``M``."""
    return [d for d in smith_normal_form(M).diagonal if d]


# --------------------------------------------------------------------------
# lattices and congruence systems


def integer_kernel(M: Sequence[Sequence[int]], cols: int) -> Matrix:
    """Basis (as columns of the returned n x r matrix) of {x in Z^cols : M x = 0}."""
    snf = smith_normal_form(M, cols=cols)
    rank = sum(1 for d in snf.diagonal if d)
    return [row[rank:] for row in snf.V]


def lattice_basis(generators: Sequence[Sequence[int]], dim: int) -> Matrix:
    """Basis columns of the full-rank lattice spanned by the given column vectors.

    ``generators`` is a dim x s matrix whose columns span the lattice.
    """
    snf = smith_normal_form(generators, cols=len(generators[0]) if generators else 0)
    diag = snf.diagonal
    if len(diag) < dim or any(d == 0 for d in diag[:dim]):
        raise InvalidInput("generators do not span a full-rank lattice")
    Uinv = _unimodular_inverse(snf.U)
    return [[Uinv[i][j] * diag[j] for j in range(dim)] for i in range(dim)]


def _unimodular_inverse(U: Matrix) -> Matrix:
    inv = _rational_inverse(U)
    out = []
    for row in inv:
        if any(x.denominator != 1 for x in row):
            raise InvalidInput("matrix is not unimodular")
        out.append([int(x) for x in row])
    return out


def _rational_inverse(M: Matrix) -> list[list[Fraction]]:
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c] != 0), None)
        if piv is None:
            raise InvalidInput("singular matrix")
        A[c], A[piv] = A[piv], A[c]
        inv = 1 / A[c][c]
        A[c] = [x * inv for x in A[c]]
        for r in range(n):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return [row[n:] for row in A]


def solution_group(moduli: Sequence[int], constraints: Sequence[Sequence[int]], modulus: int) -> AbelianGroup:
    """Structure of {x in (+)_i Z/m_i : C x = 0 mod N}.

    Column j of ``constraints`` holds the coefficients of variable j after
    it has been embedded into Z/N (the caller scales by N/m_j).
    """
    k = len(moduli)
    if modulus < 1:
        raise InvalidInput("modulus must be positive")
    for m in moduli:
        if m < 1 or modulus % m:
            raise InvalidInput(f"variable modulus {m} does not divide {modulus}")
    rows, cols = _check_rectangular(constraints)
    if rows and cols != k:
        raise InvalidInput(f"constraint matrix has {cols} columns for {k} variables")
    if k == 0:
        return AbelianGroup.trivial()
    if rows == 0:
        return AbelianGroup.from_orders(moduli)

    # L = projection of ker [C | -N Id] onto the first k coordinates.
    augmented = [list(row) + [-modulus if i == j else 0 for j in range(rows)] for i, row in enumerate(constraints)]
    kernel = integer_kernel(augmented, k + rows)
    gens = [kernel[i] for i in range(k)]
    B = lattice_basis(gens, k)
    # columns of diag(m) expressed in the basis B of L
    Binv = _rational_inverse(B)
    X = []
    for i in range(k):
        row = []
        for j in range(k):
            x = Binv[i][j] * moduli[j]
            if x.denominator != 1:
                raise AssertionError("sublattice not contained in solution lattice")
            row.append(int(x))
        X.append(row)
    return AbelianGroup(tuple(d for d in smith_normal_form(X).diagonal if d > 1))


def torsion_part(G: AbelianGroup, n: int) -> AbelianGroup:
    """The n-torsion subgroup G[n]."""
    if n < 1:
        raise InvalidInput("n must be >= 1")
    return AbelianGroup.from_orders(gcd(d, n) for d in G.invariant_factors)


def direct_sum(*groups: AbelianGroup) -> AbelianGroup:
    return AbelianGroup.from_orders(d for G in groups for d in G.invariant_factors)


def quotient_group(ambient: Sequence[int], subgroup_gens: Sequence[Sequence[int]]) -> AbelianGroup:
    """(+)_i Z/n_i modulo the subgroup generated by the given element vectors."""
    k = len(ambient)
    for g in subgroup_gens:
        if len(g) != k:
            raise InvalidInput(f"generator {list(g)} has {len(g)} entries, ambient has {k}")
    if k == 0:
        return AbelianGroup.trivial()
    relations = [[n if i == j else 0 for j in range(k)] for i, n in enumerate(ambient)]
    relations += [list(map(int, g)) for g in subgroup_gens]
    diag = smith_normal_form(relations).diagonal
    return AbelianGroup(tuple(d for d in diag if d > 1))


def group_from_order_profile(profile: dict[int, int]) -> AbelianGroup:
    """Recover a finite abelian group from #{x : e x = 0} for every e dividing its exponent.

    For each prime p the counts at p, p^2, ... determine how many cyclic
    factors have p-part at least p^j.
    """
    exponent = max(profile) if profile else 1
    orders: list[int] = []
    for p in _prime_factors(exponent):
        j, logs = 1, [0]
        while exponent % p**j == 0:
            count = profile[p**j]
            logs.append(_exact_log(count, p))
            j += 1
        at_least = [logs[i] - logs[i - 1] for i in range(1, len(logs))]
        for i, c in enumerate(at_least):
            nxt = at_least[i + 1] if i + 1 < len(at_least) else 0
            orders += [p ** (i + 1)] * (c - nxt)
    return AbelianGroup.from_orders(orders)


def _exact_log(n: int, p: int) -> int:
    e = 0
    while n % p == 0 and n > 1:
        n //= p
        e += 1
    if n != 1:
        raise AssertionError("element count is not a prime power")
    return e


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]
