"""Slow, obviously-correct reference implementations used as test oracles.

Everything here is written for clarity over speed and shares no code with
the library paths it checks: maximal independent sets come from explicit
subset enumeration, symbolic powers from bounded exponent-vector search,
weight witnesses from an exhaustive grid, and minimalization from a
quadratic divisibility filter.
"""

from __future__ import annotations

from itertools import combinations, product as iproduct

from coverlab import Graph, MonomialIdeal


def brute_force_mis(g: Graph) -> list[tuple[int, ...]]:
    """All maximal independent sets by checking every vertex subset.

    Only for graphs small enough that 2^n enumeration is cheap.
    """
    assert g.n <= 14, "oracle is exponential; keep it small"
    verts = range(g.n)

    def independent(s: tuple[int, ...]) -> bool:
        return all(not g.has_edge(i, j) for i, j in combinations(s, 2))

    independents = [
        s
        for k in range(g.n + 1)
        for s in combinations(verts, k)
        if independent(s)
    ]
    as_sets = [set(s) for s in independents]
    maximal = [
        tuple(sorted(s))
        for s in as_sets
        if not any(s < other for other in as_sets)
    ]
    return sorted(maximal)


def naive_minimalize(vecs: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Minimal elements under componentwise <=, by pairwise comparison."""
    uniq = sorted(set(vecs))

    def divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
        return all(x <= y for x, y in zip(a, b))

    return sorted(
        (v for v in uniq if not any(w != v and divides(w, v) for w in uniq)),
        key=lambda v: (sum(v), v),
    )


def bounded_m_cover_exponents(g: Graph, m: int) -> list[tuple[int, ...]]:
    """Minimal exponent vectors putting weight at least m on every edge.

    A monomial lies in the m-th power of the edge pair ideal exactly when
    its exponents on the two endpoints sum to at least m, so the minimal
    solutions all live in {0..m}^n and a full grid walk finds them.
    """
    assert (m + 1) ** g.n <= 10**7, "oracle grid too large"
    hits = [
        e
        for e in iproduct(range(m + 1), repeat=g.n)
        if all(e[i] + e[j] >= m for i, j in g.edges())
    ]
    return naive_minimalize(hits)


def grid_quasi_witness(
    ideal: MonomialIdeal, max_weight: int = 6
) -> tuple[int, ...] | None:
    """Exhaustive weight search over {1..max_weight}^n.

    Finding nothing here does not prove no witness exists (the grid is
    bounded), so use it one-sidedly: a grid hit must imply the solver
    finds a witness, and a solver miss must imply a grid miss.
    """
    gens = ideal.gens
    if not gens:
        return None
    n = len(ideal.universe)
    for alpha in iproduct(range(1, max_weight + 1), repeat=n):
        d0 = sum(a * e for a, e in zip(alpha, gens[0]))
        if all(sum(a * e for a, e in zip(alpha, g)) == d0 for g in gens[1:]):
            return alpha
    return None


def naive_power_exponents(ideal: MonomialIdeal, m: int) -> list[tuple[int, ...]]:
    """Minimal generators of the m-th ordinary power via all m-multisets."""
    from itertools import combinations_with_replacement

    sums = [
        tuple(sum(col) for col in zip(*combo))
        for combo in combinations_with_replacement(ideal.gens, m)
    ]
    return naive_minimalize(sums)


def tree_from_prufer(seq: tuple[int, ...]) -> Graph:
    """Labeled tree on len(seq)+2 vertices from a Prufer sequence."""
    from coverlab import from_edge_list

    n = len(seq) + 2
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    last = [i for i in range(n) if degree[i] == 1]
    edges.append((last[0], last[1]))
    labels = [f"x{i + 1}" for i in range(n)]
    return from_edge_list(labels, [(labels[a], labels[b]) for a, b in edges])


def free_tree_count_via_prufer(n: int) -> int:
    """Count free trees by deduplicating all labeled trees up to isomorphism.

    Exhaustive over n^(n-2) Prufer sequences; the dedup leans on the
    backtracking isomorphism test, not on canonical codes, so it is an
    independent check of the level-sequence enumeration.
    """
    from coverlab import is_isomorphic

    if n == 1:
        return 1
    if n == 2:
        return 1
    reps: list[Graph] = []
    for seq in iproduct(range(n), repeat=n - 2):
        t = tree_from_prufer(seq)
        if not any(is_isomorphic(t, r) for r in reps):
            reps.append(t)
    return len(reps)


def random_graph(rng, n: int, p: float) -> Graph:
    """Erdos-Renyi style graph on labels x1..xn."""
    from coverlab import from_edge_list

    labels = [f"x{i + 1}" for i in range(n)]
    edges = [
        (labels[i], labels[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return from_edge_list(labels, edges)
