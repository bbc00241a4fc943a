"""Finite simple graphs with labeled vertices and the constructions the
cover-ideal machinery needs: parametric families, maximal independent set
enumeration, equivalent-vertex reduction, and small-graph isomorphism.

Vertices are indexed 0..n-1 internally; adjacency is kept as one bitset
per vertex so independence tests are single mask operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

__all__ = [
    "Graph",
    "IndependentSetFamily",
    "from_edge_list",
    "complete",
    "cycle",
    "path",
    "banded_path",
    "circulant",
    "edgeless",
    "join",
    "linked_join",
    "whisker",
    "two_cliques",
    "h_family",
    "from_independent_sets",
    "maximal_independent_sets",
    "independence_number",
    "equivalent_pairs",
    "reduce",
    "g_sub",
    "induced_subgraph",
    "is_tree",
    "is_complete",
    "is_almost_complete",
    "every_internal_vertex_has_leaf",
    "is_isomorphic",
    "is_whiskering_of",
    "free_trees",
]


@dataclass(frozen=True)
class Graph:
    """Simple graph: vertex labels plus adjacency bitsets (bit j of
    nbr_bits[i] set iff i ~ j). No loops, no multi-edges."""

    labels: tuple[str, ...]
    nbr_bits: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise ValueError("duplicate vertex label")
        if any(not lab for lab in self.labels):
            raise ValueError("empty vertex label")
        if len(self.nbr_bits) != n:
            raise ValueError("adjacency size mismatch")
        for i, bits in enumerate(self.nbr_bits):
            if bits >> n:
                raise ValueError("neighbor bit out of range")
            if bits & (1 << i):
                raise ValueError(f"loop at vertex {self.labels[i]}")
        for i in range(n):
            for j in range(i + 1, n):
                if bool(self.nbr_bits[i] & (1 << j)) != bool(self.nbr_bits[j] & (1 << i)):
                    raise ValueError("asymmetric adjacency")

    @property
    def n(self) -> int:
        return len(self.labels)

    def neighbors(self, i: int) -> tuple[int, ...]:
        return tuple(j for j in range(self.n) if self.nbr_bits[i] >> j & 1)

    def degree(self, i: int) -> int:
        return self.nbr_bits[i].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if self.nbr_bits[i] >> j & 1
        ]

    def edge_count(self) -> int:
        return sum(self.degree(i) for i in range(self.n)) // 2

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.nbr_bits[i] >> j & 1)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"unknown vertex label {label!r}") from None


@dataclass(frozen=True)
class IndependentSetFamily:
    """All maximal independent sets of a graph, canonically ordered:
    each set is a sorted index tuple, the family sorted lexicographically."""

    sets: tuple[tuple[int, ...], ...]

    @property
    def independence_number(self) -> int:
        return max((len(s) for s in self.sets), default=0)

    def __iter__(self):
        return iter(self.sets)

    def __len__(self) -> int:
        return len(self.sets)


def _build(labels: list[str] | tuple[str, ...], edges: list[tuple[int, int]]) -> Graph:
    n = len(labels)
    bits = [0] * n
    for i, j in edges:
        if i == j:
            raise ValueError(f"loop at vertex {labels[i]}")
        bits[i] |= 1 << j
        bits[j] |= 1 << i
    return Graph(tuple(labels), tuple(bits))


def _default_labels(n: int, prefix: str = "x") -> list[str]:
    return [f"{prefix}{i + 1}" for i in range(n)]


# ── constructors ─────────────────────────────────────────────────────────────


def from_edge_list(labels: list[str], edges: list[tuple[str, str]]) -> Graph:
    """Graph from explicit labels and label pairs. Duplicate labels, loop
    edges, and edges naming unknown labels are rejected."""
    if len(set(labels)) != len(labels):
        dup = next(lab for i, lab in enumerate(labels) if lab in labels[:i])
        raise ValueError(f"duplicate label {dup!r}")
    pos = {lab: i for i, lab in enumerate(labels)}
    idx_edges = []
    for a, b in edges:
        if a not in pos:
            raise ValueError(f"unknown vertex label {a!r}")
        if b not in pos:
            raise ValueError(f"unknown vertex label {b!r}")
        if a == b:
            raise ValueError(f"loop edge at {a!r}")
        idx_edges.append((pos[a], pos[b]))
    return _build(list(labels), idx_edges)


def edgeless(n: int) -> Graph:
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    return _build(_default_labels(n), [])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    return _build(_default_labels(n), list(combinations(range(n), 2)))


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return _build(_default_labels(n), [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    return _build(_default_labels(n), [(i, (i + 1) % n) for i in range(n)])


def star(k: int) -> Graph:
    """Star with center x1 and k leaves x2..x(k+1)."""
    if k < 1:
        raise ValueError("star needs at least one leaf")
    return _build(_default_labels(k + 1), [(0, i) for i in range(1, k + 1)])


def banded_path(n: int, s: int) -> Graph:
    """Path-like band: vertices x1..xn, edges between xi, xj iff |i-j| <= s."""
    if n < 1 or s < 1:
        raise ValueError("band parameters must be positive")
    edges = [(i, j) for i in range(n) for j in range(i + 1, min(n, i + s + 1))]
    return _build(_default_labels(n), edges)


def circulant(n: int, s: int) -> Graph:
    """Circulant with full band of jumps 1..s; requires 1 <= s <= n/2."""
    if n < 3:
        raise ValueError("circulant needs at least three vertices")
    if not 1 <= s <= n // 2:
        raise ValueError("jump bound must satisfy 1 <= s <= n/2")
    edges = set()
    for i in range(n):
        for d in range(1, s + 1):
            j = (i + d) % n
            edges.add((min(i, j), max(i, j)))
    return _build(_default_labels(n), sorted(edges))


def _relabeled_pair(g1: Graph, g2: Graph) -> tuple[Graph, Graph]:
    h1 = Graph(tuple(_default_labels(g1.n, "x")), g1.nbr_bits)
    h2 = Graph(tuple(_default_labels(g2.n, "y")), g2.nbr_bits)
    return h1, h2


def join(g1: Graph, g2: Graph) -> Graph:
    """Join on disjoint copies: every vertex of g1 adjacent to every vertex
    of g2. Vertices are relabeled x1..xn and y1..ym in input order."""
    return linked_join(g1, list(g1.labels), g2, list(g2.labels))


def linked_join(g1: Graph, u1: list[str], g2: Graph, u2: list[str]) -> Graph:
    """Partial join: add all edges between u1 (labels of g1) and u2 (labels
    of g2), keeping both edge sets. Vertices are relabeled x1..xn, y1..ym."""
    idx1 = sorted({g1.index(lab) for lab in u1})
    idx2 = sorted({g2.index(lab) for lab in u2})
    h1, h2 = _relabeled_pair(g1, g2)
    n = g1.n
    labels = list(h1.labels) + list(h2.labels)
    edges = g1.edges()
    edges += [(n + i, n + j) for i, j in g2.edges()]
    edges += [(i, n + j) for i in idx1 for j in idx2]
    return _build(labels, edges)


def whisker(g: Graph) -> Graph:
    """Attach one pendant leaf to every vertex. The base is relabeled
    x1..xn and the leaf on xi is named yi."""
    if g.n < 1:
        raise ValueError("whiskering needs at least one vertex")
    labels = _default_labels(g.n, "x") + _default_labels(g.n, "y")
    edges = g.edges() + [(i, g.n + i) for i in range(g.n)]
    return _build(labels, edges)


def two_cliques(n: int, m: int) -> Graph:
    """Complete graphs of sizes n and m glued along one shared vertex:
    the first on x1..xn, the second on xn together with y2..ym.
    Requires 2 <= n <= m."""
    if not 2 <= n <= m:
        raise ValueError("parameters must satisfy 2 <= n <= m")
    labels = _default_labels(n, "x") + [f"y{j}" for j in range(2, m + 1)]
    edges = list(combinations(range(n), 2))
    edges += [(n + a, n + b) for a, b in combinations(range(m - 1), 2)]
    edges += [(n - 1, n + j) for j in range(m - 1)]
    return _build(labels, edges)


def from_independent_sets(n: int, sets: list[tuple[int, ...]]) -> Graph:
    """Graph on x1..xn (1-based indices in `sets`) whose edges are exactly
    the pairs lying inside none of the listed sets. Errors unless the
    listed sets come out as precisely the maximal independent sets."""
    if n < 1:
        raise ValueError("vertex count must be positive")
    fam = []
    for s in sets:
        t = tuple(sorted(set(s)))
        if len(t) != len(s):
            raise ValueError("repeated vertex inside an independent set")
        if t and (t[0] < 1 or t[-1] > n):
            raise ValueError("independent set vertex out of range")
        fam.append(t)
    if len(set(fam)) != len(fam):
        raise ValueError("duplicate independent set")
    covered = set()
    for s in fam:
        covered.update(combinations(s, 2))
    edges = [
        (i - 1, j - 1)
        for i, j in combinations(range(1, n + 1), 2)
        if (i, j) not in covered
    ]
    g = _build(_default_labels(n), edges)
    realized = {tuple(v + 1 for v in s) for s in maximal_independent_sets(g)}
    if realized != set(fam):
        raise ValueError("listed sets are not the maximal independent sets of the result")
    return g


def h_family(k: int) -> Graph:
    """Member k >= 3 of the family on 2k vertices whose cover ideal has a
    single defining fiber relation, of degree k. Built by replacing one
    pair in the previous member's maximal independent sets with three new
    pairs; realizability is checked at construction."""
    if k < 3:
        raise ValueError("family starts at k = 3")
    sets: set[tuple[int, int]] = {(1, 2), (3, 4), (5, 6), (1, 3), (2, 5), (4, 6)}
    size = 6
    for j in range(3, k):
        # grow from 2j to 2j+2 vertices
        sets.remove((2 * j - 2, 2 * j))
        sets.add((2 * j + 1, 2 * j + 2))
        sets.add((2 * j - 2, 2 * j + 1))
        sets.add((2 * j, 2 * j + 2))
        size += 2
    return from_independent_sets(size, sorted(sets))


# ── independent sets ─────────────────────────────────────────────────────────


def maximal_independent_sets(g: Graph) -> IndependentSetFamily:
    """Maximal independent sets via maximal cliques of the complement
    (pivoting Bron-Kerbosch on bitsets)."""
    n = g.n
    full = (1 << n) - 1
    comp = [full & ~(g.nbr_bits[i] | (1 << i)) for i in range(n)]
    out: list[tuple[int, ...]] = []

    def bk(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(tuple(i for i in range(n) if r >> i & 1))
            return
        pool = p | x
        pivot = max(
            (i for i in range(n) if pool >> i & 1),
            key=lambda i: (p & comp[i]).bit_count(),
        )
        cand = p & ~comp[pivot]
        while cand:
            v = (cand & -cand).bit_length() - 1
            bk(r | (1 << v), p & comp[v], x & comp[v])
            p &= ~(1 << v)
            x |= 1 << v
            cand &= cand - 1

    if n == 0:
        return IndependentSetFamily(((),))
    bk(0, full, 0)
    return IndependentSetFamily(tuple(sorted(out)))


def independence_number(g: Graph) -> int:
    return maximal_independent_sets(g).independence_number


def count_independent_sets(g: Graph, min_size: int = 0) -> int:
    """Number of independent vertex subsets with at least `min_size` elements.

    Exhaustive over all subsets, so only sensible for small graphs.
    """
    total = 0
    for mask in range(1 << g.n):
        if bin(mask).count("1") < min_size:
            continue
        ok = True
        rest = mask
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            if g.nbr_bits[i] & mask:
                ok = False
                break
            rest ^= low
        if ok:
            total += 1
    return total


# ── equivalent vertices and reduction ────────────────────────────────────────


def _equivalent_index_pairs(g: Graph) -> list[tuple[int, int]]:
    return [
        (i, j)
        for i in range(g.n)
        for j in range(i + 1, g.n)
        if g.nbr_bits[i] == g.nbr_bits[j]
    ]


def equivalent_pairs(g: Graph) -> list[tuple[str, str]]:
    """Pairs of vertices with identical open neighborhoods (such vertices
    are never adjacent)."""
    return [(g.labels[i], g.labels[j]) for i, j in _equivalent_index_pairs(g)]


def induced_subgraph(g: Graph, keep: list[int]) -> Graph:
    keep = sorted(set(keep))
    labels = [g.labels[i] for i in keep]
    pos = {v: k for k, v in enumerate(keep)}
    edges = [(pos[i], pos[j]) for i, j in g.edges() if i in pos and j in pos]
    return _build(labels, edges)


def reduce(g: Graph) -> Graph:
    """Delete one vertex of an equivalent pair until none remain. The
    higher-indexed vertex of the first pair goes each round, which makes
    the survivor set deterministic."""
    cur = g
    while True:
        pairs = _equivalent_index_pairs(cur)
        if not pairs:
            return cur
        _, j = pairs[0]
        cur = induced_subgraph(cur, [v for v in range(cur.n) if v != j])


def g_sub(g: Graph, i: int) -> Graph:
    """Induced subgraph on the complement of the closed neighborhood of
    vertex i."""
    if not 0 <= i < g.n:
        raise ValueError("vertex index out of range")
    drop = g.nbr_bits[i] | (1 << i)
    return induced_subgraph(g, [v for v in range(g.n) if not drop >> v & 1])


# ── predicates ───────────────────────────────────────────────────────────────


def is_complete(g: Graph) -> bool:
    return all(g.degree(i) == g.n - 1 for i in range(g.n))


def _is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = [0]
    while frontier:
        v = frontier.pop()
        rest = g.nbr_bits[v] & ~seen
        while rest:
            w = (rest & -rest).bit_length() - 1
            seen |= 1 << w
            frontier.append(w)
            rest &= rest - 1
    return seen == (1 << g.n) - 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.edge_count() == g.n - 1 and _is_connected(g)


def is_almost_complete(g: Graph) -> bool:
    """True when deleting some single vertex leaves a complete graph.

    Checked two ways (vertex deletion, and: independence number <= 2 with
    all 2-element independent sets through one common vertex) and the two
    answers are asserted identical.
    """
    if g.n < 1:
        raise ValueError("needs at least one vertex")
    by_deletion = any(
        is_complete(induced_subgraph(g, [v for v in range(g.n) if v != i]))
        for i in range(g.n)
    )
    pairs = [
        (i, j)
        for i in range(g.n)
        for j in range(i + 1, g.n)
        if not g.has_edge(i, j)
    ]
    if independence_number(g) > 2:
        by_pairs = False
    elif not pairs:
        by_pairs = True
    else:
        common = set(pairs[0])
        for p in pairs[1:]:
            common &= set(p)
        by_pairs = bool(common)
    assert by_deletion == by_pairs
    return by_deletion


def every_internal_vertex_has_leaf(g: Graph) -> bool:
    """Every vertex of degree >= 2 has a neighbor of degree 1."""
    return all(
        any(g.degree(j) == 1 for j in g.neighbors(i))
        for i in range(g.n)
        if g.degree(i) >= 2
    )


# ── isomorphism (small graphs) ───────────────────────────────────────────────


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Backtracking isomorphism test for desk-scale graphs."""
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False
    n = g1.n
    deg1 = [g1.degree(i) for i in range(n)]
    deg2 = [g2.degree(i) for i in range(n)]
    if sorted(deg1) != sorted(deg2):
        return False
    # map the rarest degrees first to prune early
    order = sorted(range(n), key=lambda i: (deg1.count(deg1[i]), -deg1[i]))
    mapping = [-1] * n
    used = [False] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        for w in range(n):
            if used[w] or deg2[w] != deg1[v]:
                continue
            ok = True
            for u in order[:k]:
                if g1.has_edge(v, u) != g2.has_edge(w, mapping[u]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(k + 1):
                    return True
                mapping[v] = -1
                used[w] = False
        return False

    return extend(0)


def is_whiskering_of(g: Graph, base: Graph) -> bool:
    """True when g is isomorphic to the whiskering of base."""
    if g.n != 2 * base.n:
        return False
    return is_isomorphic(g, whisker(base))


# ── free trees ───────────────────────────────────────────────────────────────


def _rooted_level_sequences(n: int):
    """Canonical level sequences of rooted trees on n vertices, generated
    by the classical successor rule in decreasing lexicographic order."""
    levels = list(range(n))
    while True:
        yield tuple(levels)
        p = next((i for i in range(n - 1, -1, -1) if levels[i] > 1), None)
        if p is None:
            return
        q = next(i for i in range(p - 1, -1, -1) if levels[i] == levels[p] - 1)
        for i in range(p, n):
            levels[i] = levels[i - (p - q)]


def _tree_edges_from_levels(levels: tuple[int, ...]) -> list[tuple[int, int]]:
    last_at_depth: dict[int, int] = {}
    edges = []
    for v, d in enumerate(levels):
        if d > 0:
            edges.append((last_at_depth[d - 1], v))
        last_at_depth[d] = v
    return edges


def _centroids(n: int, adj: list[list[int]]) -> list[int]:
    """Centroid vertices: minimizers of the largest component left after
    deleting the vertex. A tree has one centroid or two adjacent ones."""
    if n == 1:
        return [0]
    best = n
    cents: list[int] = []
    for v in range(n):
        worst = 0
        seen = {v}
        for w in adj[v]:
            if w in seen:
                continue
            stack = [w]
            seen.add(w)
            size = 0
            while stack:
                u = stack.pop()
                size += 1
                for z in adj[u]:
                    if z not in seen:
                        seen.add(z)
                        stack.append(z)
            worst = max(worst, size)
        if worst < best:
            best = worst
            cents = [v]
        elif worst == best:
            cents.append(v)
    return cents


def _ahu_code(root: int, parent: int, adj: list[list[int]]) -> str:
    subs = sorted(_ahu_code(w, root, adj) for w in adj[root] if w != parent)
    return "(" + "".join(subs) + ")"


def _canonical_tree_code(n: int, edges: list[tuple[int, int]]) -> str:
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    cents = _centroids(n, adj)
    if len(cents) == 1:
        return _ahu_code(cents[0], -1, adj)
    a, b = cents
    return "|".join(sorted((_ahu_code(a, b, adj), _ahu_code(b, a, adj))))


def free_trees(n: int) -> list[Graph]:
    """All free trees on n vertices, one representative per isomorphism
    class, in a deterministic order."""
    if n < 1:
        raise ValueError("tree needs at least one vertex")
    if n == 1:
        return [edgeless(1)]
    seen: dict[str, list[tuple[int, int]]] = {}
    for levels in _rooted_level_sequences(n):
        edges = _tree_edges_from_levels(levels)
        code = _canonical_tree_code(n, edges)
        if code not in seen:
            seen[code] = edges
    return [
        _build(_default_labels(n), seen[code]) for code in sorted(seen)
    ]
