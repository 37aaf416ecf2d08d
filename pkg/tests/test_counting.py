import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxeter_unique import (
    CoxeterGraph,
    Infinite,
    InfiniteBond,
    InfiniteType,
    SimplyLacedTree,
    SingleHighEdgeTree,
    chain_count_long,
    chain_count_total,
    connected_components,
    family_graph,
    finiteness,
    oracle_count,
    parse_graph,
    u_component,
    u_graph,
    u_simply_laced_tree,
    u_single_high_edge,
)
from coxeter_unique.counting import InvalidArgs

from helpers import naive_unique_words, random_finite_class_tree, random_tree, relabelled


def _brute_chain_count(g):
    """Count vertex subsets that induce a path, by enumeration."""
    count = 0
    for size in range(1, g.n + 1):
        for subset in itertools.combinations(range(g.n), size):
            sub = g.subgraph(subset)
            degrees = [len(sub.neighbors(v)) for v in range(sub.n)]
            connected = len(sub.bonds) == size - 1 and len(connected_components(sub)) == 1
            if connected and max(degrees, default=0) <= 2:
                count += 1
    return count


def test_chain_counts():
    assert (chain_count_total(1), chain_count_long(1)) == (1, 0)
    assert chain_count_total(4) == 10
    assert (chain_count_total(8), chain_count_long(8)) == (36, 28)
    assert chain_count_total(0) == 0


@pytest.mark.parametrize("seed", range(20))
def test_chain_count_matches_enumeration(seed):
    rng = random.Random(seed)
    g = random_tree(rng, rng.randint(1, 8))
    assert _brute_chain_count(g) == chain_count_total(g.n)


def test_simply_laced_values():
    assert u_simply_laced_tree(1) == 2
    assert u_simply_laced_tree(6) == 37
    assert u_simply_laced_tree(8) == 65


@pytest.mark.parametrize(
    "n, m, a, b, expected",
    [
        (4, 4, 1, 3, 27),  # B4
        (4, 4, 2, 2, 25),  # F4
        (3, 5, 1, 2, 19),  # H3
        (3, 6, 1, 2, 24),  # affine G2
        (2, 7, 1, 1, 13),  # I2(7)
    ],
)
def test_single_high_edge_values(n, m, a, b, expected):
    assert u_single_high_edge(n, m, a, b) == expected


@pytest.mark.parametrize("args", [(4, 4, 0, 4), (4, 4, 1, 2), (3, float("inf"), 1, 2), (3, 2, 1, 2)])
def test_single_high_edge_rejects_bad_args(args):
    with pytest.raises(InvalidArgs):
        u_single_high_edge(*args)


def test_single_high_edge_is_exact_beyond_64_bits():
    m = 2**70
    assert u_single_high_edge(2, m, 1, 1) == 2 * m - 1
    assert u_single_high_edge(2, m + 1, 1, 1) == 2 * m + 1


def test_u_component():
    assert isinstance(u_component(InfiniteType(InfiniteBond(("r", "s")))), Infinite)
    assert u_component(SimplyLacedTree(3)) == 10
    # 2-generator label-9 graph, by direct word enumeration
    g = parse_graph("vertices r s\nedge r s 9")
    assert len(naive_unique_words(g, 10)) == 17
    assert u_component(SingleHighEdgeTree(2, 9, 1, 1, ("r", "s"))) == 17


def test_u_graph_small_cases():
    assert u_graph(CoxeterGraph(())) == 1
    g = parse_graph("vertices r s")
    assert [len(w) for w in naive_unique_words(g, 3)] == [0, 1, 1]
    assert u_graph(g) == 3
    a2 = parse_graph("vertices r s\nedge r s 3")
    b2 = parse_graph("vertices x y\nedge x y 4")
    assert len(naive_unique_words(a2, 6)) == 5
    assert len(naive_unique_words(b2, 6)) == 7
    assert u_graph(a2.disjoint_union(b2)) == 11


def test_u_graph_reports_first_infinite_reason():
    g = family_graph("A2").disjoint_union(relabelled(family_graph("~A1"), "x")).disjoint_union(
        relabelled(family_graph("~A2"), "y"))
    u = u_graph(g)
    assert isinstance(u, Infinite)
    assert u.reason == InfiniteBond(("xr", "xs"))


def test_finiteness_reports():
    rep = finiteness(family_graph("B4"))
    assert rep.finite and len(rep.per_component) == 1
    assert not finiteness(family_graph("~A1")).finite
    assert not finiteness(family_graph("~A3")).finite
    assert finiteness(CoxeterGraph(())).finite


# -- properties ------------------------------------------------------------

@given(a=st.integers(1, 60), b=st.integers(1, 60), m=st.integers(3, 40))
def test_symmetric_in_a_and_b(a, b, m):
    assert u_single_high_edge(a + b, m, a, b) == u_single_high_edge(a + b, m, b, a)


def test_odd_branch_at_three_degenerates_to_simply_laced():
    for n in range(2, 51):
        for a in range(1, n):
            assert u_single_high_edge(n, 3, a, n - a) == u_simply_laced_tree(n)


def test_dihedral_identity():
    for m in range(3, 101):
        assert u_single_high_edge(2, m, 1, 1) == 2 * m - 1


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_additivity(seed):
    rng = random.Random(seed)
    g1 = random_finite_class_tree(rng)
    g2 = relabelled(random_finite_class_tree(rng), "x")
    assert u_graph(g1.disjoint_union(g2)) == u_graph(g1) + u_graph(g2) - 1


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_finite_iff_report_finite_and_lower_bound(seed):
    rng = random.Random(seed)
    g = random_finite_class_tree(rng)
    if rng.random() < 0.5:
        i, j = rng.sample(range(g.n), 2) if g.n >= 2 else (0, 0)
        if i != j:
            g = g.with_bond(i, j, rng.choice([3, 4, 5, float("inf")]))
    u = u_graph(g)
    assert (not isinstance(u, Infinite)) == finiteness(g).finite
    if not isinstance(u, Infinite):
        assert u >= g.n + 1
        assert u == oracle_count(g)
