"""Pure Python exponent-vector kernels.

Exponent vectors are tuples of nonnegative ints over a fixed universe.
All three entry points return canonically sorted (total degree, then
lexicographic) lists with duplicates and strict multiples removed.
Arbitrary-precision integers, so no overflow concerns on this path.
"""

from __future__ import annotations

BACKEND = "python"

Vec = tuple[int, ...]


def _sorted_unique(vecs) -> list[Vec]:
    return sorted(set(vecs), key=lambda v: (sum(v), v))


def _divides(a: Vec, b: Vec) -> bool:
    return all(x <= y for x, y in zip(a, b))


def minimalize(vecs: list[Vec]) -> list[Vec]:
    """Drop duplicates and every vector strictly divisible by another."""
    ordered = _sorted_unique(vecs)
    kept: list[Vec] = []
    kept_deg: list[int] = []
    for v in ordered:
        dv = sum(v)
        # only strictly smaller degrees can strictly divide; equal-degree
        # duplicates are already gone
        if any(d < dv and _divides(k, v) for k, d in zip(kept, kept_deg)):
            continue
        kept.append(v)
        kept_deg.append(dv)
    return kept


def product_minimalize(a: list[Vec], b: list[Vec]) -> list[Vec]:
    """Minimal generators among all pairwise sums."""
    sums = {tuple(x + y for x, y in zip(u, v)) for u in a for v in b}
    return minimalize(list(sums))


def lcm_minimalize(a: list[Vec], b: list[Vec]) -> list[Vec]:
    """Minimal generators among all pairwise componentwise maxima."""
    maxes = {tuple(max(x, y) for x, y in zip(u, v)) for u in a for v in b}
    return minimalize(list(maxes))
