"""Exhaustive search oracles, cross-checked against brute force."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oddramsey import (
    ColouredGraph,
    ParameterError,
    SearchBudget,
    SearchStatus,
    Switch,
    build_field_colouring,
    build_general_n,
    build_three_block,
    exact_odd_ramsey,
    find_even_coloured_hc,
    find_hamilton_cycle,
    find_odd_cycle,
    find_switch,
    odd_colour_classes,
    uniform_complete_colouring,
)

import naive


def test_none_exhausts_all_cycles_of_k5():
    # odd length forces an odd class, and (5-1)!/2 = 12 cycles exist
    g = ColouredGraph.complete_graph(5, 1, lambda u, v: 1)
    res = find_even_coloured_hc(g)
    assert res.status is SearchStatus.NONE
    assert res.cycles_examined == 12
    assert res.cycles_examined == naive.count_hamilton_cycles(5)


def test_witness_on_monochrome_even_host():
    g = ColouredGraph.complete_graph(6, 1, lambda u, v: 1)
    res = find_even_coloured_hc(g)
    assert res.status is SearchStatus.WITNESS
    assert res.witness.is_hamilton(g)
    assert odd_colour_classes(g, res.witness) == ()


def test_budget_exhaustion_reports_progress():
    g = uniform_complete_colouring(9, 2, seed=0)
    res = find_even_coloured_hc(g, SearchBudget(max_cycles=5))
    assert res.status in (SearchStatus.EXHAUSTED, SearchStatus.WITNESS)
    assert res.cycles_examined <= 5


def test_budget_hit_exactly_at_completion_is_still_none():
    # K5 monochrome has exactly 12 Hamilton cycles, none even; a cap of
    # 12 lets the enumeration finish, so the answer is a certificate
    g = ColouredGraph.complete_graph(5, 1, lambda u, v: 1)
    res = find_even_coloured_hc(g, SearchBudget(max_cycles=12))
    assert res.status is SearchStatus.NONE
    assert res.cycles_examined == 12
    res = find_even_coloured_hc(g, SearchBudget(max_cycles=11))
    assert res.status is SearchStatus.EXHAUSTED
    assert res.cycles_examined == 11


def test_bad_budget_rejected():
    with pytest.raises(ParameterError):
        SearchBudget(max_cycles=0)
    with pytest.raises(ParameterError):
        SearchBudget(max_seconds=-1.0)
    with pytest.raises(ParameterError):
        SearchBudget(parallel_width=0)


@settings(max_examples=40, deadline=None)
@given(st.integers(4, 7), st.integers(1, 3), st.integers(0, 5_000))
def test_matches_naive_even_hc_search(n, r, seed):
    g = uniform_complete_colouring(n, r, seed=seed)
    res = find_even_coloured_hc(g)
    ref = naive.find_even_hc(g)
    if ref is None:
        assert res.status is SearchStatus.NONE
    else:
        assert res.status is SearchStatus.WITNESS
        assert odd_colour_classes(g, res.witness) == ()


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2_000))
def test_label_permutation_invariance(seed):
    import numpy as np

    g = uniform_complete_colouring(7, 2, seed=seed)
    rng = np.random.Generator(np.random.Philox(seed + 1))
    perm = list(rng.permutation(7))
    h = ColouredGraph.complete_graph(
        7, 2, lambda u, v: g.colour(perm[u], perm[v])
    )
    a = find_even_coloured_hc(g).status
    b = find_even_coloured_hc(h).status
    assert a == b


def test_parallel_matches_sequential():
    g = build_general_n(8)
    seq = find_even_coloured_hc(g)
    par = find_even_coloured_hc(g, SearchBudget(parallel_width=4))
    assert seq.status is par.status is SearchStatus.NONE
    assert seq.cycles_examined == par.cycles_examined == naive.count_hamilton_cycles(8)

    h = ColouredGraph.complete_graph(8, 1, lambda u, v: 1)
    seq = find_even_coloured_hc(h)
    par = find_even_coloured_hc(h, SearchBudget(parallel_width=4))
    assert seq.status is par.status is SearchStatus.WITNESS
    assert par.witness.is_hamilton(h)
    assert odd_colour_classes(h, par.witness) == ()


def test_field_and_block_colourings_have_no_even_hc():
    for g in [build_field_colouring(3, 1), build_general_n(8), build_three_block(8, 1)]:
        assert find_even_coloured_hc(g).status is SearchStatus.NONE


def test_find_hamilton_cycle_respects_host_edges():
    g = build_three_block(8, 1)
    res = find_hamilton_cycle(g)
    assert res.status is SearchStatus.WITNESS
    res.witness.validate_in(g)
    assert res.witness.is_hamilton(g)

    path = ColouredGraph.from_edge_list(5, 1, [(i, i + 1, 1) for i in range(4)])
    assert find_hamilton_cycle(path).status is SearchStatus.NONE


@settings(max_examples=50, deadline=None)
@given(st.integers(4, 9), st.integers(2, 4), st.integers(0, 5_000))
def test_find_switch_agrees_with_naive(n, r, seed):
    g = uniform_complete_colouring(n, r, seed=seed)
    sw = find_switch(g)
    ref = naive.find_switch_square(g)
    if ref is None:
        assert sw is None
    else:
        assert sw is not None
        sw.verify_in(g)


def test_find_switch_respects_forbidden_vertices():
    g = uniform_complete_colouring(10, 3, seed=42)
    sw = find_switch(g)
    assert sw is not None
    blocked = frozenset(range(g.n)) - frozenset(sw.square)
    other = find_switch(g, blocked)
    if other is not None:
        assert set(other.square) == set(sw.square)
        other.verify_in(g)
    assert find_switch(g, frozenset(range(g.n - 3))) is None


def test_find_odd_cycle_c4():
    # vertex 4 agrees with (0, 1) while vertex 5 does not
    def col(u, v):
        if (u, v) in {(0, 4), (1, 4), (0, 5)}:
            return 1
        if (u, v) == (1, 5):
            return 2
        return 1

    g = ColouredGraph.complete_graph(6, 2, lambda u, v: col(*sorted((u, v))))
    c4 = find_odd_cycle(g, 4)
    assert c4 is not None and c4.length == 4
    cols = [g.colour(a, b) for a, b in c4.edges()]
    from collections import Counter

    assert sorted(k % 2 for k in Counter(cols).values()) == [1, 1]


def test_bipartite_cut_colouring_has_no_odd_short_cycles():
    # colour by whether endpoints sit on the same side of a 3|3 cut:
    # every cycle crosses the cut an even number of times, so both
    # classes are even on every C4 and C6
    def col(u, v):
        return 1 if (u < 3) == (v < 3) else 2

    g = ColouredGraph.complete_graph(6, 2, col)
    assert find_odd_cycle(g, 4) is None
    assert find_odd_cycle(g, 6) is None


def test_exact_trivial_hosts():
    for n in [3, 5, 7]:
        res = exact_odd_ramsey(n)
        assert res.exact and res.value == 1

    path6 = [(i, i + 1) for i in range(5)]
    res = exact_odd_ramsey(6, edges=path6)
    assert res.exact and res.value == 1

    two_triangles = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
    res = exact_odd_ramsey(6, edges=two_triangles)
    assert res.exact and res.value == 1

    star = [(0, i) for i in range(1, 5)]
    res = exact_odd_ramsey(5, edges=star)
    assert res.exact and res.value == 1


def test_exact_k4_matches_naive():
    res = exact_odd_ramsey(4)
    assert res.exact and res.value == 3
    assert naive.odd_ramsey_value(4) == 3


def test_exact_budget_reports_bounds():
    res = exact_odd_ramsey(6, budget=SearchBudget(max_cycles=3))
    if not res.exact:
        assert 1 <= res.lower <= res.upper


def test_exact_rejects_large_hosts():
    # odd sizes short-circuit to 1, so the size gate bites at even 10
    with pytest.raises(ParameterError):
        exact_odd_ramsey(10)
    assert exact_odd_ramsey(9).value == 1
