"""Fiber cone invariants of quasi-equigenerated monomial ideals.

For such an ideal with t minimal generators the fiber cone is the
subalgebra generated by the generators; its Krull dimension (the
analytic spread l) is the rank of the exponent matrix. The number b of
degree-two relations among the generators satisfies b <= binom(a+1, 2)
with a = t - l, with equality exactly for the ideals whose second power
is as small as possible (the Freiman ones); b = 0 with a = 0 means no
relations at all (linear type).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb
from typing import NamedTuple

from . import graph as graphs
from .grading import WeightWitness, quasi_witness
from .ideal import MonomialIdeal, _check_budget, cover_ideal, mu_power, product
from .ratlin import RatMatrix, rank


class NotQuasiEquigeneratedError(ValueError):
    """Fiber invariants require a weight witness."""


def _require_witness(
    ideal: MonomialIdeal, witness: WeightWitness | None
) -> WeightWitness:
    if witness is None:
        raise NotQuasiEquigeneratedError(
            "no weight witness: fiber invariants are not defined here"
        )
    return witness


def analytic_spread(
    ideal: MonomialIdeal, witness: WeightWitness | None = None
) -> int:
    """Krull dimension of the fiber cone: rank of the t x n exponent
    matrix. Cross-asserted against 1 + the affine dimension of the
    exponent set whenever the common weighted degree is positive; the
    unit ideal (degree zero) has a polynomial fiber cone of dimension 1.
    """
    if witness is None:
        witness = quasi_witness(ideal)
    witness = _require_witness(ideal, witness)
    base = ideal.gens[0]
    diff_rows = [
        [Fraction(e - b) for e, b in zip(g, base)] for g in ideal.gens[1:]
    ]
    if diff_rows:
        affine_dim = rank(RatMatrix.from_rows(diff_rows, ncols=len(ideal.universe)))
    else:
        affine_dim = 0
    if witness.degree == 0:
        return 1
    exp_rank = rank(
        RatMatrix.from_rows(
            [[Fraction(e) for e in g] for g in ideal.gens],
            ncols=len(ideal.universe),
        )
    )
    assert exp_rank == affine_dim + 1
    return exp_rank


@dataclass(frozen=True)
class FiberReport:
    """Numeric fiber-cone profile of a quasi-equigenerated ideal."""

    generator_count: int  # t
    spread: int  # l
    excess: int  # a = t - l
    square_generator_count: int  # number of minimal generators of I^2
    quadratic_relation_count: int  # b
    freiman: bool
    linear_type: bool
    witness: WeightWitness


def fiber_report(ideal: MonomialIdeal) -> FiberReport:
    """Computes t, l, a, the generator count of the square, the count b
    of independent quadratic relations, and the classification flags.
    Raises NotQuasiEquigeneratedError without a witness."""
    witness = _require_witness(ideal, quasi_witness(ideal))
    t = ideal.mu
    spread = analytic_spread(ideal, witness)
    a = t - spread
    mu2 = mu_power(ideal, 2)
    b = comb(t + 1, 2) - mu2
    bound = comb(a + 1, 2)
    assert 0 <= b <= bound
    return FiberReport(
        generator_count=t,
        spread=spread,
        excess=a,
        square_generator_count=mu2,
        quadratic_relation_count=b,
        freiman=b == bound,
        linear_type=spread == t,
        witness=witness,
    )


# ── power counts ─────────────────────────────────────────────────────────────


def predicted_power_count(t: int, spread: int, j: int) -> int:
    """Closed-form generator count of the j-th power when the ideal is
    Freiman: binom(l+j-2, j-1) * t - (j-1) * binom(l+j-2, j)."""
    if j < 1:
        raise ValueError("power index must be positive")
    return comb(spread + j - 2, j - 1) * t - (j - 1) * comb(spread + j - 2, j)


class PowerCount(NamedTuple):
    j: int
    computed: int
    predicted: int

    @property
    def matches(self) -> bool:
        return self.computed == self.predicted


def power_count_check(ideal: MonomialIdeal, j_max: int) -> list[PowerCount]:
    """mu(I^j) for j = 1..j_max against the Freiman closed form. All rows
    match iff the ideal is Freiman; non-Freiman ideals overshoot already
    at j = 2."""
    witness = _require_witness(ideal, quasi_witness(ideal))
    spread = analytic_spread(ideal, witness)
    out = []
    current = None
    for j in range(1, j_max + 1):
        current = ideal if current is None else product(current, ideal)
        out.append(PowerCount(j, current.mu, predicted_power_count(ideal.mu, spread, j)))
    return out


# ── toric relation profile ───────────────────────────────────────────────────


class ToricRelation(NamedTuple):
    """Minimal binomial relation: two generator index multisets (sorted
    tuples, disjoint supports) whose products coincide."""

    degree: int
    left: tuple[int, ...]
    right: tuple[int, ...]


@dataclass(frozen=True)
class ToricProfile:
    """Per-degree counts of new minimal relations among the generators,
    with one representative relation for each."""

    max_degree: int
    counts: tuple[tuple[int, int], ...]  # (degree, new minimal relations)
    representatives: tuple[ToricRelation, ...]

    def count(self, degree: int) -> int:
        return dict(self.counts)[degree]


def _apply_relation(
    multiset: tuple[int, ...], left: tuple[int, ...], right: tuple[int, ...]
) -> tuple[int, ...] | None:
    """Substitute left -> right inside the multiset if left is contained
    in it; None otherwise."""
    rest = list(multiset)
    for x in left:
        try:
            rest.remove(x)
        except ValueError:
            return None
    return tuple(sorted(rest + list(right)))


def toric_profile(ideal: MonomialIdeal, max_degree: int = 4) -> ToricProfile:
    """Counts minimal generators of the fiber relation ideal degree by
    degree, up to max_degree.

    Degree-r index multisets are grouped by their exponent sums; inside a
    group, two multisets are linked when one already-recorded lower-degree
    relation rewrites one into the other. Each group contributes
    (connected components - 1) new minimal relations, and one
    representative pair per new relation is recorded (sides are always
    support-disjoint, which is asserted).
    """
    _require_witness(ideal, quasi_witness(ideal))
    if max_degree < 2:
        raise ValueError("profile needs max_degree >= 2")
    t = ideal.mu
    n = len(ideal.universe)
    relations: list[ToricRelation] = []
    counts: list[tuple[int, int]] = []
    for r in range(2, max_degree + 1):
        _check_budget(comb(t + r - 1, r), f"degree-{r} toric fiber scan")
        fibers: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
        for combo in combinations_with_replacement(range(t), r):
            total = [0] * n
            for idx in combo:
                for i, e in enumerate(ideal.gens[idx]):
                    total[i] += e
            fibers.setdefault(tuple(total), []).append(combo)
        usable = [rel for rel in relations if rel.degree < r]
        new_count = 0
        for key in sorted(fibers):
            members = fibers[key]
            if len(members) == 1:
                continue
            member_set = set(members)
            component: dict[tuple[int, ...], int] = {}
            comps: list[list[tuple[int, ...]]] = []
            for start in members:
                if start in component:
                    continue
                cid = len(comps)
                comps.append([])
                stack = [start]
                component[start] = cid
                while stack:
                    cur = stack.pop()
                    comps[cid].append(cur)
                    for rel in usable:
                        for a, b in ((rel.left, rel.right), (rel.right, rel.left)):
                            nxt = _apply_relation(cur, a, b)
                            if nxt is not None and nxt in member_set and nxt not in component:
                                component[nxt] = cid
                                stack.append(nxt)
            if len(comps) > 1:
                reps = sorted(min(c) for c in comps)
                anchor = reps[0]
                for other in reps[1:]:
                    assert not set(anchor) & set(other)
                    relations.append(ToricRelation(r, anchor, other))
                    new_count += 1
        counts.append((r, new_count))
    return ToricProfile(
        max_degree=max_degree,
        counts=tuple(counts),
        representatives=tuple(relations),
    )


# ── graph-level helpers ──────────────────────────────────────────────────────


def unique_set_vertices(g: graphs.Graph) -> list[tuple[str, tuple[str, ...]]]:
    """Vertices lying in exactly one maximal independent set, paired with
    that set (the corresponding fiber generator is a prime element)."""
    fam = graphs.maximal_independent_sets(g)
    out = []
    for v in range(g.n):
        hits = [s for s in fam if v in s]
        if len(hits) == 1:
            out.append((g.labels[v], tuple(g.labels[w] for w in hits[0])))
    return out


@dataclass(frozen=True)
class JoinFreimanCheck:
    """Freiman status of a full join against the combination rule: the
    join is Freiman iff both parts are and at least one has linear type."""

    left: FiberReport
    right: FiberReport
    joined: FiberReport

    @property
    def expected(self) -> bool:
        return (
            self.left.freiman
            and self.right.freiman
            and (self.left.linear_type or self.right.linear_type)
        )

    @property
    def matches(self) -> bool:
        return self.joined.freiman == self.expected


def join_freiman_check(g1: graphs.Graph, g2: graphs.Graph) -> JoinFreimanCheck:
    left = fiber_report(cover_ideal(g1))
    right = fiber_report(cover_ideal(g2))
    joined = fiber_report(cover_ideal(graphs.join(g1, g2)))
    return JoinFreimanCheck(left, right, joined)
