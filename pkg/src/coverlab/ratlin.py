"""Exact rational linear algebra over arbitrary-precision fractions.

Provides the three primitives the grading and fiber layers need: matrix
rank, a kernel basis, and a strictly positive integer solution of a
homogeneous system (or a certificate that none exists). Everything runs
on `fractions.Fraction`, so results are exact and deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Row = Sequence[int | Fraction]


class UnboundedError(RuntimeError):
    """Phase-1 objective claims unbounded descent; indicates a logic bug."""


@dataclass(frozen=True)
class RatMatrix:
    """Immutable rational matrix, entries stored row-major."""

    nrows: int
    ncols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.nrows < 0 or self.ncols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.nrows * self.ncols:
            raise ValueError("entry count does not match dimensions")

    @classmethod
    def from_rows(cls, rows: Iterable[Row], ncols: int | None = None) -> RatMatrix:
        mat = [[Fraction(x) for x in row] for row in rows]
        if ncols is None:
            if not mat:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(mat[0])
        for row in mat:
            if len(row) != ncols:
                raise ValueError("ragged rows")
        flat = tuple(x for row in mat for x in row)
        return cls(len(mat), ncols, flat)

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.ncols : (i + 1) * self.ncols]

    def rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.nrows)]


# ── row reduction ────────────────────────────────────────────────────────────


def _rref(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (reduced rows, pivot columns)."""
    mat = [row[:] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat, pivots


def rank(m: RatMatrix) -> int:
    """Rank over the rationals."""
    _, pivots = _rref(m.rows(), m.ncols)
    return len(pivots)


def kernel_basis(m: RatMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of the right kernel; one vector per free column, exact."""
    red, pivots = _rref(m.rows(), m.ncols)
    pivot_set = set(pivots)
    free = [c for c in range(m.ncols) if c not in pivot_set]
    basis: list[tuple[Fraction, ...]] = []
    for fc in free:
        vec = [Fraction(0)] * m.ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -red[r][fc]
        basis.append(tuple(vec))
    for vec in basis:
        for row in m.rows():
            assert sum(a * b for a, b in zip(row, vec)) == 0
    return basis


# ── positive integer solutions of M x = 0 ────────────────────────────────────


def positive_solution(m: RatMatrix) -> tuple[int, ...] | None:
    """Integer x with every x_i >= 1 and M x = 0, or None if impossible.

    Feasibility of {x real, x_i >= 1, Mx = 0} is decided by an exact
    phase-1 simplex with Bland's rule. Because the system is homogeneous,
    rational feasibility with x > 0, feasibility with x_i >= 1, and
    positive integer feasibility all coincide; a rational solution is
    scaled to a primitive integer witness before returning.
    """
    n = m.ncols
    if n == 0:
        return ()
    rows = [row for row in m.rows() if any(x != 0 for x in row)]
    if not rows:
        return (1,) * n
    # substitute x = beta + 1: A beta = b with beta >= 0
    b = [-sum(row) for row in rows]
    beta = _phase1_feasible(rows, b)
    if beta is None:
        return None
    alpha = [x + 1 for x in beta]
    scale = lcm(*(x.denominator for x in alpha))
    ints = [int(x * scale) for x in alpha]
    g = gcd(*ints)
    ints = [v // g for v in ints]
    # certify before returning; failure here would be a solver bug
    assert all(v >= 1 for v in ints)
    for row in m.rows():
        assert sum(a * v for a, v in zip(row, ints)) == 0
    return tuple(ints)


def _phase1_feasible(
    a: list[list[Fraction]], b: list[Fraction]
) -> list[Fraction] | None:
    """Phase-1 simplex for {A beta = b, beta >= 0}; returns a feasible beta.

    Artificial variables start basic; the artificial cost is minimized
    with Bland's pivoting rule (lowest eligible index), which guarantees
    termination. Feasible iff the optimum is zero.
    """
    nrows = len(a)
    n = len(a[0])
    total = n + nrows
    tableau: list[list[Fraction]] = []
    for i in range(nrows):
        row = [Fraction(x) for x in a[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        row.extend(Fraction(1) if j == i else Fraction(0) for j in range(nrows))
        row.append(rhs)
        tableau.append(row)
    basis = [n + i for i in range(nrows)]
    # reduced costs for minimizing the sum of artificials
    obj = [Fraction(0)] * (total + 1)
    for j in range(total + 1):
        obj[j] = (Fraction(1) if n <= j < total else Fraction(0)) - sum(
            tableau[i][j] for i in range(nrows)
        )

    while True:
        enter = next((j for j in range(total) if obj[j] < 0), None)
        if enter is None:
            break
        best: tuple[Fraction, int] | None = None
        leave = -1
        for i in range(nrows):
            coef = tableau[i][enter]
            if coef > 0:
                ratio = tableau[i][total] / coef
                key = (ratio, basis[i])
                if best is None or key < best:
                    best = key
                    leave = i
        if leave < 0:
            raise UnboundedError("phase-1 objective cannot be unbounded")
        _pivot(tableau, obj, leave, enter)
        basis[leave] = enter

    objective_value = -obj[total]
    if objective_value != 0:
        return None
    beta = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            beta[var] = tableau[i][total]
    return beta


def _pivot(
    tableau: list[list[Fraction]], obj: list[Fraction], r: int, c: int
) -> None:
    inv = 1 / tableau[r][c]
    tableau[r] = [x * inv for x in tableau[r]]
    prow = tableau[r]
    for i in range(len(tableau)):
        if i != r and tableau[i][c] != 0:
            f = tableau[i][c]
            tableau[i] = [x - f * y for x, y in zip(tableau[i], prow)]
    if obj[c] != 0:
        f = obj[c]
        for j in range(len(obj)):
            obj[j] -= f * prow[j]
