from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from bookramsey.counting import (
    CliqueCountReport, calc_inequality_holds, clique_count_report, count_cliques, edge_loads,
    extension_count, heavy_edges, ineq_two_holds, removal_threshold, supersaturation_bound,
)
from bookramsey.graph import complete_graph, complete_multipartite, cycle_graph

import oracles
from helpers import corpus


def test_count_examples():
    assert count_cliques(complete_graph(5), 3) == 10
    assert count_cliques(cycle_graph(5), 3) == 0
    assert count_cliques(complete_multipartite([3, 3, 3]), 3) == 27
    with pytest.raises(ValueError):
        count_cliques(cycle_graph(5), 0)


def test_extension_examples():
    assert extension_count(complete_graph(5), [1, 3]) == 3
    assert extension_count(cycle_graph(5), [2]) == 2
    assert extension_count(complete_multipartite([3, 3]), [0, 3]) == 0
    with pytest.raises(ValueError):
        extension_count(cycle_graph(5), [0, 2])


def test_heavy_edge_examples():
    k4 = complete_graph(4)
    assert heavy_edges(k4, 3, 3) == set()
    assert heavy_edges(k4, 3, 2) == set(k4.edges())
    k5e = complete_graph(5).remove_edges([(0, 1)])
    expected = {e for e, c in oracles.edge_triangle_loads(k5e, 3).items() if c >= 3}
    assert heavy_edges(k5e, 3, 3) == expected == {(2, 3), (2, 4), (3, 4)}
    with pytest.raises(ValueError):
        heavy_edges(k4, 2, 1)


def test_supersaturation_examples():
    assert supersaturation_bound(6, 3, 6) == 1
    assert supersaturation_bound(12, 3, 6) == 11
    assert supersaturation_bound(10, 2, 3) == 15
    with pytest.raises(ValueError):
        supersaturation_bound(5, 3, 6)


def test_removal_threshold_is_exact_ceiling():
    assert removal_threshold(4, 3, Fraction(1, 2)) == 1
    assert removal_threshold(48, 3, Fraction(1, 2)) == 1
    assert removal_threshold(49, 3, Fraction(1, 2)) == 2
    assert removal_threshold(96, 4, Fraction(1, 10)) == 1
    assert removal_threshold(320, 4, Fraction(1, 10)) == 10


@pytest.mark.parametrize("name,g", corpus())
def test_report_identities_and_oracle(name, g):
    for p in range(2, 6):
        if p > 2 and g.n > 12:
            continue
        rep = clique_count_report(g, p)
        assert rep.total == oracles.clique_count(g, p)
        assert rep.per_edge == oracles.edge_triangle_loads(g, p)
        assert rep.edge_sum_ok()
        assert rep.extension_sum_ok()


def test_report_json_round_trip():
    rep = clique_count_report(complete_graph(4), 3)
    back = CliqueCountReport.from_json(rep.to_json())
    assert (back.p, back.total, back.per_edge) == (3, 4, rep.per_edge)
    assert '"per_edge": [[0, 1, 2]' in rep.to_json()


def test_bounds_stay_exact_beyond_64_bits():
    assert supersaturation_bound(200, 100, 100) == comb(200, 100)
    assert comb(200, 100) > 2**64
    assert count_cliques(complete_graph(20), 10) == comb(20, 10)


def test_arithmetic_lemma_samples():
    assert calc_inequality_holds(4)
    assert calc_inequality_holds(Fraction(401, 100))
    assert ineq_two_holds(4, 0)
    assert ineq_two_holds(200, 196)


@given(st.integers(400, 10_000))
def test_calc_inequality_grid(q):
    assert calc_inequality_holds(Fraction(q, 100))


@given(st.integers(4, 200).flatmap(lambda p: st.tuples(st.just(p), st.integers(0, p - 4))))
def test_ineq_two_pairs(pt):
    assert ineq_two_holds(*pt)


def test_edge_loads_rejects_small_p():
    with pytest.raises(ValueError):
        edge_loads(cycle_graph(5), 1)
