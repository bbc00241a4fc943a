"""Named desk-scale graph catalog shared by the sweeps and the test
suite. Entries are deterministic constructions with at most ten vertices
unless the name says otherwise."""

from __future__ import annotations

from . import graph as graphs
from .graph import Graph


def _spider_two_arm() -> Graph:
    # path x1-x2-x3 with two extra leaves on x3
    return graphs.from_edge_list(
        ["x1", "x2", "x3", "x4", "x5"],
        [("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x3", "x5")],
    )


def _double_star() -> Graph:
    # two adjacent centers with two leaves each
    return graphs.from_edge_list(
        ["x1", "x2", "x3", "x4", "x5", "x6"],
        [("x1", "x2"), ("x1", "x3"), ("x1", "x4"), ("x4", "x5"), ("x4", "x6")],
    )


def _complete_minus_edge(n: int) -> Graph:
    g = graphs.complete(n)
    edges = [(g.labels[i], g.labels[j]) for i, j in g.edges()]
    return graphs.from_edge_list(list(g.labels), edges[1:])


def _linked_counterexample() -> Graph:
    return graphs.linked_join(
        graphs.path(5), ["x2", "x3", "x5"], graphs.path(2), ["x1", "x2"]
    )


def catalog() -> list[tuple[str, Graph]]:
    """The full named catalog, in a fixed order."""
    entries: list[tuple[str, Graph]] = []
    for n in range(2, 9):
        entries.append((f"path-{n}", graphs.path(n)))
    for n in range(3, 11):
        entries.append((f"cycle-{n}", graphs.cycle(n)))
    for n in range(1, 7):
        entries.append((f"complete-{n}", graphs.complete(n)))
    for n, s in [(6, 2), (7, 2), (8, 2), (8, 3), (9, 2), (9, 3), (10, 2), (10, 4)]:
        entries.append((f"circulant-{n}-{s}", graphs.circulant(n, s)))
    for n, s in [(4, 2), (5, 2), (6, 2), (7, 3), (8, 2), (10, 3)]:
        entries.append((f"banded-path-{n}-{s}", graphs.banded_path(n, s)))
    for n, m in [(2, 2), (2, 3), (2, 4), (3, 3), (3, 4), (3, 5), (4, 4), (4, 5), (5, 5), (5, 6)]:
        entries.append((f"two-cliques-{n}-{m}", graphs.two_cliques(n, m)))
    entries.append(("h-family-3", graphs.h_family(3)))
    entries.append(("h-family-4", graphs.h_family(4)))
    for name, base in [
        ("whisker-path-2", graphs.path(2)),
        ("whisker-path-3", graphs.path(3)),
        ("whisker-path-4", graphs.path(4)),
        ("whisker-cycle-3", graphs.cycle(3)),
        ("whisker-cycle-4", graphs.cycle(4)),
        ("whisker-complete-4", graphs.complete(4)),
        ("whisker-cycle-5", graphs.cycle(5)),
    ]:
        entries.append((name, graphs.whisker(base)))
    entries.append(("star-3", graphs.star(3)))
    entries.append(("star-4", graphs.star(4)))
    entries.append(("spider-two-arm", _spider_two_arm()))
    entries.append(("double-star", _double_star()))
    entries.append(("complete-4-minus-edge", _complete_minus_edge(4)))
    entries.append(("complete-5-minus-edge", _complete_minus_edge(5)))
    entries.append(("edgeless-3", graphs.edgeless(3)))
    entries.append(("linked-counterexample", _linked_counterexample()))
    return entries


def catalog_upto(max_vertices: int) -> list[tuple[str, Graph]]:
    return [(name, g) for name, g in catalog() if g.n <= max_vertices]
