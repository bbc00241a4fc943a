"""Fiber invariants: spread, square counts, power formulas, toric profiles."""

from __future__ import annotations

import random
from math import comb

import pytest

from coverlab import (
    NotQuasiEquigeneratedError,
    analytic_spread,
    complete,
    cover_ideal,
    cycle,
    edgeless,
    fiber_report,
    h_family,
    join_freiman_check,
    linked_join,
    mu_power,
    path,
    power_count_check,
    predicted_power_count,
    quasi_witness,
    reduce,
    toric_profile,
    two_cliques,
    unique_set_vertices,
    whisker,
)
from helpers import random_graph


def test_spread_examples():
    assert analytic_spread(cover_ideal(cycle(3))) == 3
    assert analytic_spread(cover_ideal(complete(4))) == 4
    assert analytic_spread(cover_ideal(edgeless(5))) == 1
    assert analytic_spread(cover_ideal(two_cliques(3, 3))) == 4


def test_spread_requires_witness():
    with pytest.raises(NotQuasiEquigeneratedError):
        analytic_spread(cover_ideal(path(5)))
    with pytest.raises(NotQuasiEquigeneratedError):
        fiber_report(cover_ideal(path(5)))


def test_two_cliques_3_3_report():
    fr = fiber_report(cover_ideal(two_cliques(3, 3)))
    assert fr.generator_count == 5
    assert fr.spread == 4
    assert fr.excess == 1
    assert fr.square_generator_count == 14
    assert fr.quadratic_relation_count == 1
    assert fr.freiman
    assert not fr.linear_type


def test_two_cliques_4_4_report():
    fr = fiber_report(cover_ideal(two_cliques(4, 4)))
    assert fr.generator_count == 1 + 3 * 3
    assert fr.spread == 6
    assert fr.quadratic_relation_count == comb(3, 2) ** 2
    assert not fr.freiman


def test_h_family_reports():
    for k in (3, 4, 5):
        fr = fiber_report(cover_ideal(h_family(k)))
        assert fr.generator_count == 2 * k
        assert fr.spread == 2 * k - 1
        assert fr.excess == 1
        assert fr.quadratic_relation_count == 0
        assert not fr.freiman
        assert not fr.linear_type


def test_whisker_triangle_report():
    fr = fiber_report(cover_ideal(whisker(cycle(3))))
    assert fr.generator_count == 4
    assert fr.spread == 4
    assert fr.freiman and fr.linear_type


def test_complete_graph_linear_type():
    for n in (2, 3, 4, 5):
        fr = fiber_report(cover_ideal(complete(n)))
        assert fr.generator_count == n
        assert fr.spread == n
        assert fr.linear_type and fr.freiman


def test_square_count_bounds():
    rng = random.Random(41)
    for _ in range(30):
        g = random_graph(rng, rng.randint(2, 6), 0.6)
        ideal = cover_ideal(g)
        if ideal.is_unit() or quasi_witness(ideal) is None:
            continue
        fr = fiber_report(ideal)
        t, l, a = fr.generator_count, fr.spread, fr.excess
        assert fr.square_generator_count <= comb(t + 1, 2)
        assert fr.square_generator_count >= l * t - comb(l, 2)
        assert 0 <= fr.quadratic_relation_count <= comb(a + 1, 2)
        assert fr.freiman == (
            fr.square_generator_count == l * t - comb(l, 2)
        )


def test_power_counts_freiman_all_degrees():
    # a dimension-4 square-count equality propagates to every later power
    for g in [two_cliques(3, 3), two_cliques(3, 5), whisker(cycle(3)), cycle(5)]:
        ideal = cover_ideal(g)
        fr = fiber_report(ideal)
        assert fr.freiman
        for row in power_count_check(ideal, 4):
            assert row.matches, (g.labels, row)


def test_power_counts_non_freiman_strict_excess():
    for g in [two_cliques(4, 4), h_family(3), h_family(4)]:
        ideal = cover_ideal(g)
        fr = fiber_report(ideal)
        assert not fr.freiman
        rows = power_count_check(ideal, 2)
        assert rows[-1].computed > rows[-1].predicted


def test_predicted_power_count_formula():
    # t=5, l=4: predictions 5, 14, 30, 55
    assert predicted_power_count(5, 4, 1) == 5
    assert predicted_power_count(5, 4, 2) == 4 * 5 - comb(4, 2)
    assert predicted_power_count(5, 4, 3) == comb(5, 2) * 5 - 2 * comb(5, 3)
    mu2 = mu_power(cover_ideal(two_cliques(3, 3)), 2)
    assert mu2 == predicted_power_count(5, 4, 2)


def test_toric_profile_two_cliques_3_3():
    ideal = cover_ideal(two_cliques(3, 3))
    profile = toric_profile(ideal, 3)
    assert profile.counts == ((2, 1), (3, 0))
    rel = profile.representatives[0]
    assert rel.degree == 2
    assert rel.left == (0, 3) and rel.right == (1, 2)
    # the relation really holds among the generators
    gens = ideal.gens
    lhs = tuple(map(sum, zip(gens[0], gens[3])))
    rhs = tuple(map(sum, zip(gens[1], gens[2])))
    assert lhs == rhs


def test_toric_profile_h_family():
    p3 = toric_profile(cover_ideal(h_family(3)), 3)
    assert p3.counts == ((2, 0), (3, 1))
    rel = p3.representatives[0]
    assert rel.degree == 3
    assert sorted(rel.left + rel.right) == [0, 1, 2, 3, 4, 5]
    p4 = toric_profile(cover_ideal(h_family(4)), 4)
    assert p4.counts == ((2, 0), (3, 0), (4, 1))


def test_toric_profile_counts_quadratics_like_report():
    for g in [two_cliques(3, 3), two_cliques(3, 4), two_cliques(4, 4),
              cycle(5), whisker(path(3))]:
        ideal = cover_ideal(g)
        fr = fiber_report(ideal)
        profile = toric_profile(ideal, 2)
        assert profile.count(2) == fr.quadratic_relation_count


def test_toric_representatives_have_disjoint_supports():
    for g in [two_cliques(3, 3), two_cliques(4, 4), h_family(3), h_family(4)]:
        profile = toric_profile(cover_ideal(g), 4)
        for rel in profile.representatives:
            assert not set(rel.left) & set(rel.right)


def test_linear_type_ideals_have_empty_profile():
    for g in [cycle(3), complete(4), whisker(cycle(3))]:
        profile = toric_profile(cover_ideal(g), 3)
        assert all(c == 0 for _, c in profile.counts)


def test_unique_set_vertices_examples():
    # in a 4-cycle both diagonal pairs form the only sets containing them
    got = unique_set_vertices(cycle(4))
    assert [v for v, _ in got] == ["x1", "x2", "x3", "x4"]
    # the 5-path: only the middle vertex
    got5 = unique_set_vertices(path(5))
    assert [v for v, _ in got5] == ["x3"]
    assert got5[0][1] == ("x1", "x3", "x5")
    # whiskered triangle: each base vertex lies in exactly one maximal
    # independent set (itself plus the other two leaves); leaves lie in two
    wct = unique_set_vertices(whisker(cycle(3)))
    assert [v for v, _ in wct] == ["x1", "x2", "x3"]
    assert wct[0][1] == ("x1", "y2", "y3")


def test_fiber_invariants_stable_under_reduction():
    rng = random.Random(53)
    compared = 0
    for _ in range(40):
        g = random_graph(rng, rng.randint(2, 7), 0.6)
        r = reduce(g)
        if r.n == g.n:
            continue
        ideal, rideal = cover_ideal(g), cover_ideal(r)
        if ideal.is_unit() or quasi_witness(ideal) is None:
            continue
        fr, rfr = fiber_report(ideal), fiber_report(rideal)
        assert fr.generator_count == rfr.generator_count
        assert fr.spread == rfr.spread
        assert fr.square_generator_count == rfr.square_generator_count
        assert fr.freiman == rfr.freiman
        assert toric_profile(ideal, 3).counts == toric_profile(rideal, 3).counts
        for m in (2, 3):
            assert mu_power(ideal, m) == mu_power(rideal, m)
        compared += 1
    assert compared >= 5


def test_join_freiman_checks():
    cases = [
        (cycle(3), cycle(3)),
        (cycle(3), path(2)),
        (path(2), path(2)),
        (complete(4), path(2)),
        (cycle(5), path(2)),
        (cycle(3), cycle(5)),
        (path(3), path(2)),
        (two_cliques(3, 3), path(2)),
        (two_cliques(3, 3), cycle(3)),
        (two_cliques(3, 3), two_cliques(3, 3)),
        (cycle(4), path(2)),
        (whisker(path(2)), path(2)),
    ]
    for g1, g2 in cases:
        chk = join_freiman_check(g1, g2)
        assert chk.matches, (g1.labels, g2.labels)


def test_join_of_two_non_linear_type_freimans():
    # both factors Freiman but neither of linear type: the join is not Freiman
    chk = join_freiman_check(two_cliques(3, 3), two_cliques(3, 3))
    assert chk.left.freiman and chk.right.freiman
    assert not chk.left.linear_type and not chk.right.linear_type
    assert not chk.joined.freiman
    assert chk.expected is False and chk.matches


def test_linked_join_mixed_minimality_example():
    g = linked_join(path(5), ["x2", "x3", "x5"], path(2), ["x1", "x2"])
    ideal = cover_ideal(g)
    degrees = {sum(gen) for gen in ideal.gens}
    assert len(degrees) > 1  # not equigenerated
    w = quasi_witness(ideal)
    assert w is not None
    assert w.weights == (1, 2, 1, 1, 1, 1, 1)
