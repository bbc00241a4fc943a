"""Weighted grading of monomial ideals.

An ideal is quasi-equigenerated when some strictly positive integer
weight vector gives all minimal generators the same weighted degree;
plain equigeneration is the all-ones special case. The witness search is
exact: the difference system of the generators goes to the rational
phase-1 solver and any returned weight vector is re-verified here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import graph as graphs
from .ideal import MonomialIdeal, cover_ideal, weighted_degree
from .ratlin import RatMatrix, positive_solution


@dataclass(frozen=True)
class WeightWitness:
    """Positive integer weights under which every generator has the same
    weighted degree."""

    weights: tuple[int, ...]
    degree: int


def is_equigenerated(ideal: MonomialIdeal) -> bool:
    """All generators of equal total degree. Errors on the zero ideal."""
    if ideal.is_zero():
        raise ValueError("the zero ideal has no generation degree")
    degs = {sum(g) for g in ideal.gens}
    return len(degs) == 1


def difference_matrix(ideal: MonomialIdeal, baseline: int = 0) -> RatMatrix:
    """Rows are generator exponent vectors minus the baseline generator's;
    its positive kernel vectors are exactly the grading witnesses."""
    if ideal.is_zero():
        raise ValueError("the zero ideal has no difference matrix")
    base = ideal.gens[baseline]
    rows = [
        [Fraction(e - b) for e, b in zip(g, base)]
        for i, g in enumerate(ideal.gens)
        if i != baseline
    ]
    return RatMatrix.from_rows(rows, ncols=len(ideal.universe))


def quasi_witness(ideal: MonomialIdeal) -> WeightWitness | None:
    """A verified weight witness, or None when no grading exists.

    Equigenerated ideals short-circuit to the all-ones witness. The unit
    ideal is equigenerated by convention, with common degree zero.
    """
    if ideal.is_zero():
        raise ValueError("the zero ideal is outside the grading framework")
    n = len(ideal.universe)
    if is_equigenerated(ideal):
        return WeightWitness((1,) * n, sum(ideal.gens[0]))
    alpha = positive_solution(difference_matrix(ideal))
    if alpha is None:
        return None
    degs = {weighted_degree(g, alpha) for g in ideal.gens}
    if len(degs) != 1:
        raise AssertionError("solver returned an invalid witness")
    return WeightWitness(alpha, degs.pop())


# ── closed-form expectations ─────────────────────────────────────────────────


@dataclass(frozen=True)
class CirculantQuasiCheck:
    """Computed quasi-equigeneration of the full-band circulant against
    two closed-form bounds: the corrected one obtained by composing the
    banded-path classification (s >= (n-2)/3 or s = (n-3)/4) and the
    looser printed variant (s >= (n-1)/3 or s = (n-3)/4)."""

    n: int
    s: int
    computed: bool
    derived_bound: bool
    printed_bound: bool

    @property
    def matches_derived(self) -> bool:
        return self.computed == self.derived_bound

    @property
    def bounds_disagree(self) -> bool:
        return self.derived_bound != self.printed_bound


def circulant_quasi_check(n: int, s: int) -> CirculantQuasiCheck:
    g = graphs.circulant(n, s)
    computed = quasi_witness(cover_ideal(g)) is not None
    derived = 3 * s >= n - 2 or 4 * s == n - 3
    printed = 3 * s >= n - 1 or 4 * s == n - 3
    return CirculantQuasiCheck(n, s, computed, derived, printed)


@dataclass(frozen=True)
class TreeQuasiCheck:
    """Computed quasi-equigeneration of a tree's cover ideal against the
    leaf criterion: every vertex of degree at least two has a leaf
    neighbor."""

    expected: bool
    computed: bool

    @property
    def matches(self) -> bool:
        return self.expected == self.computed


def tree_quasi_check(t: graphs.Graph) -> TreeQuasiCheck:
    if not graphs.is_tree(t):
        raise ValueError("input is not a tree")
    expected = graphs.every_internal_vertex_has_leaf(t)
    computed = quasi_witness(cover_ideal(t)) is not None
    return TreeQuasiCheck(expected, computed)


@dataclass(frozen=True)
class IndependenceTwoCheck:
    """When the independence number is two, a grading witness must exist."""

    independence_number: int
    witness_found: bool

    @property
    def applies(self) -> bool:
        return self.independence_number == 2

    @property
    def consistent(self) -> bool:
        return not self.applies or self.witness_found


def independence_two_check(g: graphs.Graph) -> IndependenceTwoCheck:
    c = graphs.independence_number(g)
    found = quasi_witness(cover_ideal(g)) is not None
    return IndependenceTwoCheck(c, found)
