"""Monomial ideals over a fixed labeled variable universe.

Generators are dense exponent tuples kept minimal (no generator divides
another) and canonically sorted by total degree then lexicographically.
Cover ideals, ordinary and symbolic powers, and intersections all run on
exact integer arithmetic; oversized intermediate products are refused
with a capacity error rather than attempted.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb

from . import kernels
from .graph import Graph, maximal_independent_sets

MAX_UNIVERSE = 64
DEFAULT_MAX_PRODUCTS = 5_000_000

Vec = tuple[int, ...]


class CapacityError(RuntimeError):
    """A computation would exceed the configured product budget."""


def _product_budget() -> int:
    raw = os.environ.get("COVERLAB_MAX_PRODUCTS")
    if raw is None:
        return DEFAULT_MAX_PRODUCTS
    try:
        value = int(raw)
    except ValueError:
        raise RuntimeError(f"COVERLAB_MAX_PRODUCTS must be an integer, not {raw!r}") from None
    if value < 1:
        raise RuntimeError("COVERLAB_MAX_PRODUCTS must be positive")
    return value


def _check_budget(count: int, what: str) -> None:
    budget = _product_budget()
    if count > budget:
        raise CapacityError(
            f"{what} needs {count} products, over the budget of {budget} "
            "(raise COVERLAB_MAX_PRODUCTS to override)"
        )


@dataclass(frozen=True)
class MonomialIdeal:
    """Minimal monomial generating set over a labeled universe."""

    universe: tuple[str, ...]
    gens: tuple[Vec, ...]

    def __post_init__(self) -> None:
        if len(self.universe) > MAX_UNIVERSE:
            raise CapacityError(
                f"universe of {len(self.universe)} variables exceeds the "
                f"limit of {MAX_UNIVERSE}"
            )
        if len(set(self.universe)) != len(self.universe):
            raise ValueError("duplicate variable label")
        for g in self.gens:
            if len(g) != len(self.universe):
                raise ValueError("generator length does not match universe")
            if any(e < 0 for e in g):
                raise ValueError("negative exponent")

    @property
    def mu(self) -> int:
        """Number of minimal generators."""
        return len(self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    def generator_strings(self) -> list[str]:
        return [monomial_str(self.universe, g) for g in self.gens]


def monomial_str(universe: tuple[str, ...], exps: Vec) -> str:
    parts = []
    for lab, e in zip(universe, exps):
        if e == 1:
            parts.append(lab)
        elif e > 1:
            parts.append(f"{lab}^{e}")
    return "*".join(parts) if parts else "1"


def minimalize(universe: tuple[str, ...], monomials: list[Vec]) -> MonomialIdeal:
    """Ideal generated by the given monomials, reduced to the minimal
    canonical generating set."""
    uni = tuple(universe)
    vecs = []
    for m in monomials:
        vec = tuple(m)
        if len(vec) != len(uni):
            raise ValueError("monomial length does not match universe")
        if any(e < 0 for e in vec):
            raise ValueError("negative exponent")
        vecs.append(vec)
    return MonomialIdeal(uni, tuple(kernels.minimalize(vecs)))


def unit_ideal(universe: tuple[str, ...]) -> MonomialIdeal:
    return MonomialIdeal(tuple(universe), ((0,) * len(universe),))


def cover_ideal(g: Graph) -> MonomialIdeal:
    """Intersection of the edge prime ideals: generated by one squarefree
    monomial per maximal independent set (the product of the vertices
    outside the set). The edgeless graph yields the unit ideal."""
    fam = maximal_independent_sets(g)
    gens = []
    for s in fam:
        inside = set(s)
        gens.append(tuple(0 if i in inside else 1 for i in range(g.n)))
    return minimalize(g.labels, gens)


def weighted_degree(exps: Vec, weights: tuple[int, ...]) -> int:
    """Dot product of an exponent vector with a weight vector."""
    if len(exps) != len(weights):
        raise ValueError("weight vector length does not match exponent vector")
    return sum(e * w for e, w in zip(exps, weights))


# ── products and powers ──────────────────────────────────────────────────────


def product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    if a.universe != b.universe:
        raise ValueError("universe mismatch")
    if a.is_zero() or b.is_zero():
        return MonomialIdeal(a.universe, ())
    _check_budget(len(a.gens) * len(b.gens), "ideal product")
    return MonomialIdeal(
        a.universe, tuple(kernels.product_minimalize(list(a.gens), list(b.gens)))
    )


def power(a: MonomialIdeal, m: int) -> MonomialIdeal:
    """m-th ordinary power by iterated products, minimalized each stage."""
    if m < 0:
        raise ValueError("power exponent must be nonnegative")
    if m == 0:
        return unit_ideal(a.universe)
    out = a
    for _ in range(m - 1):
        out = product(out, a)
    return out


def power_by_multisets(a: MonomialIdeal, m: int) -> MonomialIdeal:
    """m-th power by direct multiset expansion. Independent of the
    iterated route (own minimalization), kept for cross-checking."""
    if m < 0:
        raise ValueError("power exponent must be nonnegative")
    if m == 0:
        return unit_ideal(a.universe)
    if a.is_zero():
        return MonomialIdeal(a.universe, ())
    t = len(a.gens)
    _check_budget(comb(t + m - 1, m), "multiset power expansion")
    sums = set()
    for combo in combinations_with_replacement(a.gens, m):
        total = [0] * len(a.universe)
        for vec in combo:
            for i, e in enumerate(vec):
                total[i] += e
        sums.add(tuple(total))
    ordered = sorted(sums, key=lambda v: (sum(v), v))
    kept: list[Vec] = []
    for v in ordered:
        if not any(
            sum(k) < sum(v) and all(x <= y for x, y in zip(k, v)) for k in kept
        ):
            kept.append(v)
    return MonomialIdeal(a.universe, tuple(kept))


def mu_power(a: MonomialIdeal, m: int) -> int:
    """Number of minimal generators of the m-th power."""
    return power(a, m).mu


# ── intersections and symbolic powers ────────────────────────────────────────


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    if a.universe != b.universe:
        raise ValueError("universe mismatch")
    if a.is_zero() or b.is_zero():
        return MonomialIdeal(a.universe, ())
    _check_budget(len(a.gens) * len(b.gens), "ideal intersection")
    return MonomialIdeal(
        a.universe, tuple(kernels.lcm_minimalize(list(a.gens), list(b.gens)))
    )


def symbolic_power(g: Graph, m: int) -> MonomialIdeal:
    """m-th symbolic power of the cover ideal: the intersection of the
    m-th powers of the edge ideals (xi, xj). Its generators are the
    minimal vertex m-covers. With no edges this is the unit ideal."""
    if m < 1:
        raise ValueError("symbolic power order must be positive")
    n = g.n
    out = unit_ideal(g.labels)
    for i, j in g.edges():
        edge_gens = []
        for k in range(m + 1):
            vec = [0] * n
            vec[i] = k
            vec[j] = m - k
            edge_gens.append(tuple(vec))
        out = intersect(out, MonomialIdeal(g.labels, tuple(edge_gens)))
    return out
