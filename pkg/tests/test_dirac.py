"""Two-colour machinery: agreement structure, odd short cycles, even
Hamilton cycles in hosts of high minimum degree."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oddramsey import (
    ColouredGraph,
    CyclePath,
    ParameterError,
    SearchStatus,
    build_agree_matrix,
    classify_two_colouring,
    even_hc_from_odd_cycle,
    even_hc_super_dirac,
    find_even_coloured_hc,
    hamilton_cycle_dirac,
    odd_colour_classes,
    odd_cycle_from_triple,
    random_dense_two_colouring,
    uniform_complete_colouring,
)

import naive


def cut_colouring(n: int, split: int) -> ColouredGraph:
    # same side of the cut -> colour 1, across -> colour 2; every cycle
    # crosses the cut evenly, so no short odd cycle exists anywhere
    return ColouredGraph.complete_graph(
        n, 2, lambda u, v: 1 if (u < split) == (v < split) else 2
    )


def mixed_pair_colouring(n: int) -> ColouredGraph:
    # vertex 2 agrees with the pair (0, 1), vertex 3 disagrees
    def col(u, v):
        return 2 if (u, v) == (1, 3) else 1

    return ColouredGraph.complete_graph(n, 2, lambda u, v: col(*sorted((u, v))))


def sparse_cherry_host() -> ColouredGraph:
    # pairwise commons: (0,1) share only 3, (1,2) share only 4, (0,2)
    # share only 5; the first two agree, the last disagrees
    edges = [
        (0, 3, 1),
        (1, 3, 1),
        (1, 4, 1),
        (2, 4, 1),
        (0, 5, 1),
        (2, 5, 2),
    ]
    return ColouredGraph.from_edge_list(6, 2, edges)


def agree_violation_host() -> ColouredGraph:
    # agreement fails to be transitive: 0 ~ 1 through block {3, 4},
    # 1 ~ 2 through block {5, 6}, but 0 and 2 disagree through both of
    # their commons 1 and 7.  Every other pair has pure commons, so the
    # classifier cannot take the mixed exit first.
    edges = [
        (0, 1, 1),
        (1, 2, 2),
        (0, 3, 1),
        (0, 4, 1),
        (0, 7, 1),
        (1, 3, 1),
        (1, 4, 1),
        (1, 5, 1),
        (1, 6, 1),
        (2, 5, 1),
        (2, 6, 1),
        (2, 7, 2),
        (3, 7, 1),
        (4, 7, 1),
        (5, 7, 1),
        (6, 7, 1),
    ]
    return ColouredGraph.from_edge_list(8, 2, edges)


def test_agree_matrix_kinds():
    g = mixed_pair_colouring(8)
    am = build_agree_matrix(g)
    assert am.kind(0, 1) == "mixed"
    h = cut_colouring(8, 4)
    bm = build_agree_matrix(h)
    assert bm.kind(0, 1) == "agree"
    assert bm.kind(0, 4) == "disagree"
    sparse = sparse_cherry_host()
    sm = build_agree_matrix(sparse)
    assert sm.kind(0, 1) == "agree"
    assert sm.kind(1, 2) == "agree"
    assert sm.kind(0, 2) == "disagree"
    assert sm.kind(0, 4) == "none"


def test_agree_matrix_needs_two_colours():
    g = uniform_complete_colouring(8, 3, seed=0)
    with pytest.raises(ParameterError):
        build_agree_matrix(g)


def test_classify_mixed_branch():
    g = mixed_pair_colouring(8)
    branch, payload = classify_two_colouring(g)
    assert branch == "mixed"
    u, v = payload
    am = build_agree_matrix(g)
    assert am.kind(u, v) == "mixed"


def test_classify_transitive_branch():
    g = cut_colouring(8, 4)
    branch, comps = classify_two_colouring(g)
    assert branch == "transitive"
    assert sorted(map(sorted, comps)) == [[0, 1, 2, 3], [4, 5, 6, 7]]


def test_classify_agree_violation_branch():
    g = agree_violation_host()
    branch, triple = classify_two_colouring(g)
    assert branch == "agree-violation"
    am = build_agree_matrix(g)
    x, y, z = triple
    kinds = sorted((am.kind(x, y), am.kind(y, z), am.kind(x, z)))
    assert kinds == ["agree", "agree", "disagree"]


def test_classify_requires_commons_everywhere():
    from oddramsey import ProcedureFailure

    with pytest.raises(ProcedureFailure):
        classify_two_colouring(sparse_cherry_host())


def test_odd_cycle_from_triple_is_doubly_odd():
    for g in (sparse_cherry_host(), agree_violation_host()):
        c6 = odd_cycle_from_triple(g, 0, 1, 2)
        assert c6.length == 6
        c6.validate_in(g)
        assert len(odd_colour_classes(g, c6)) == 2


def test_no_odd_cycle_in_cut_colouring():
    from oddramsey import find_odd_cycle

    g = cut_colouring(10, 5)
    assert find_odd_cycle(g, 4) is None
    assert find_odd_cycle(g, 6) is None


def test_even_hc_from_odd_c4():
    g = mixed_pair_colouring(10)
    c4 = CyclePath((0, 2, 1, 3))
    assert len(odd_colour_classes(g, c4)) == 2
    hc = even_hc_from_odd_cycle(g, c4)
    assert hc.is_hamilton(g)
    hc.validate_in(g)
    assert odd_colour_classes(g, hc) == ()


def test_even_hc_from_odd_c6():
    # plant the sparse violation pattern inside a complete host so the
    # path-routing around the six-cycle has room to work
    base = {(0, 5): 2}

    def col(u, v):
        return base.get((u, v), base.get((v, u), 1))

    g = ColouredGraph.complete_graph(14, 2, col)
    c6 = CyclePath((0, 3, 1, 4, 2, 5))
    assert len(odd_colour_classes(g, c6)) == 2
    hc = even_hc_from_odd_cycle(g, c6)
    assert hc.is_hamilton(g)
    hc.validate_in(g)
    assert odd_colour_classes(g, hc) == ()


def test_hamilton_cycle_dirac_on_dense_host():
    for seed in range(5):
        g = random_dense_two_colouring(16, 0.6, 8, seed=seed)
        hc = hamilton_cycle_dirac(g)
        assert hc.is_hamilton(g)
        hc.validate_in(g)


def test_super_dirac_gates():
    with pytest.raises(ParameterError):
        even_hc_super_dirac(uniform_complete_colouring(12, 3, seed=0))
    with pytest.raises(ParameterError):
        even_hc_super_dirac(uniform_complete_colouring(11, 2, seed=0))
    # 2 * 7 < 8 + 8: minimum degree too small on 8 vertices
    with pytest.raises(ParameterError):
        even_hc_super_dirac(uniform_complete_colouring(8, 2, seed=0))


def test_super_dirac_produces_even_hc():
    for seed in range(20):
        g = random_dense_two_colouring(20, 0.85, 14, seed=seed)
        hc = even_hc_super_dirac(g)
        assert hc.is_hamilton(g)
        hc.validate_in(g)
        assert odd_colour_classes(g, hc) == ()


def test_super_dirac_agrees_with_oracle_on_small_hosts():
    for seed in range(10):
        g = random_dense_two_colouring(12, 0.95, 10, seed=seed)
        hc = even_hc_super_dirac(g)
        assert odd_colour_classes(g, hc) == ()
        res = find_even_coloured_hc(g)
        assert res.status is SearchStatus.WITNESS


def test_super_dirac_on_complete_two_colourings():
    for seed in range(10):
        g = uniform_complete_colouring(14, 2, seed=seed)
        hc = even_hc_super_dirac(g)
        assert hc.is_hamilton(g)
        assert odd_colour_classes(g, hc) == ()


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10_000))
def test_super_dirac_even_hc_property(seed):
    g = random_dense_two_colouring(16, 0.9, 12, seed=seed)
    hc = even_hc_super_dirac(g)
    assert hc.is_hamilton(g) and odd_colour_classes(g, hc) == ()
