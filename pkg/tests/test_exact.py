import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from strategies import random_happy_clique, random_simple_graph, temporal_graphs
from tgreach.bipath import build_bispanner, is_bidirectionally_connected
from tgreach.core import NON_STRICT, STRICT, Setting, TemporalGraph, classify
from tgreach.exact import (
    SizeGuardError,
    Verdict,
    critical_bispanner_edges,
    is_spanning_tree,
    min_bispanner_bruteforce,
    tst_bruteforce,
    tst_simple,
)
from tgreach.reach import is_temporally_connected

settings_ = st.sampled_from([STRICT, NON_STRICT])
STAR = TemporalGraph(4, {(0, 1): [1, 2], (0, 2): [1, 2], (0, 3): [1, 2]})


def test_tst_fixtures(square, fig2):
    for setting in Setting:
        assert tst_bruteforce(square, setting).verdict is Verdict.NOT_EXISTS
    assert tst_bruteforce(fig2, NON_STRICT).verdict is Verdict.NOT_EXISTS


def test_square_trees_are_all_disconnected(square):
    trees = list(itertools.combinations(square.edge_keys(), 3))
    assert len(trees) == 4
    for tree in trees:
        for setting in Setting:
            assert not is_temporally_connected(square.restrict(tree), setting)


def test_square_gets_a_tree_with_extra_labels():
    # adding 3 to both edges labelled 1 makes a spanning tree appear
    G = TemporalGraph(4, {(0, 1): [1, 3], (1, 2): [2], (2, 3): [1, 3], (0, 3): [2]})
    res = tst_bruteforce(G, NON_STRICT)
    assert res.exists


def test_star_has_spanning_tree():
    for setting in Setting:
        res = tst_bruteforce(STAR, setting)
        assert res.verdict is Verdict.EXISTS
        assert res.tree == STAR


def test_tst_guard():
    with pytest.raises(SizeGuardError):
        tst_bruteforce(TemporalGraph(11), NON_STRICT)
    assert tst_bruteforce(TemporalGraph(11), NON_STRICT, max_n=11).verdict is Verdict.NOT_EXISTS


def test_tst_trivial_sizes():
    assert tst_bruteforce(TemporalGraph(1), STRICT).exists
    assert tst_bruteforce(TemporalGraph(2, {(0, 1): [1]}), STRICT).exists
    assert not tst_bruteforce(TemporalGraph(2), STRICT).exists


def test_tst_simple_examples(square):
    assert tst_simple(square, STRICT).verdict is Verdict.NEVER_FOR_SIMPLE_STRICT
    assert tst_simple(square, NON_STRICT).verdict is Verdict.NOT_EXISTS
    path = TemporalGraph(3, {(0, 1): [4], (1, 2): [4]})
    res = tst_simple(path, NON_STRICT)
    assert res.exists and res.tree == path
    assert tst_simple(TemporalGraph(2, {(0, 1): [7]}), STRICT).exists
    assert not tst_simple(TemporalGraph(2), STRICT).exists


def test_tst_simple_rejects_non_simple(fig2):
    with pytest.raises(ValueError):
        tst_simple(fig2, NON_STRICT)


def _check_tree_witness(G, res, setting):
    if res.exists:
        T = res.tree
        assert T.is_subgraph_of(G)
        assert is_spanning_tree(T)
        assert is_temporally_connected(T, setting)


@settings(max_examples=80, deadline=None)
@given(temporal_graphs(max_n=6, max_tau=4, max_labels=2), settings_)
def test_tst_bruteforce_matches_tree_enumeration(G, setting):
    res = tst_bruteforce(G, setting)
    assert res.exists == oracles.has_temporal_spanning_tree(G, setting)
    _check_tree_witness(G, res, setting)


@settings(max_examples=100, deadline=None)
@given(temporal_graphs(max_n=6, max_tau=4, simple=True), settings_)
def test_tst_simple_agrees_with_bruteforce(G, setting):
    fast = tst_simple(G, setting)
    slow = tst_bruteforce(G, setting)
    assert fast.exists == slow.exists
    _check_tree_witness(G, fast, setting)
    if setting is STRICT and G.n > 2:
        assert fast.verdict is Verdict.NEVER_FOR_SIMPLE_STRICT


@settings(max_examples=60, deadline=None)
@given(temporal_graphs(max_n=6, max_tau=4), settings_)
def test_tree_implies_biconnected(G, setting):
    if tst_bruteforce(G, setting).exists:
        assert is_bidirectionally_connected(G, setting)


def test_biconnected_does_not_imply_tree(fig2):
    assert is_bidirectionally_connected(fig2, NON_STRICT)
    assert not tst_bruteforce(fig2, NON_STRICT).exists


def test_min_bispanner_fixtures(square, fig2):
    k4 = random_happy_clique(random.Random(0), 4)
    k, H = min_bispanner_bruteforce(k4, NON_STRICT)
    assert k == 6 and H == k4
    k, H = min_bispanner_bruteforce(fig2, NON_STRICT)
    assert k == 6 and H == fig2
    assert oracles.min_bispanner_size(fig2, NON_STRICT) == 6
    assert min_bispanner_bruteforce(square, NON_STRICT) is None


def test_min_bispanner_upper_bound(fig2):
    assert min_bispanner_bruteforce(fig2, NON_STRICT, max_k=5) is None
    assert min_bispanner_bruteforce(fig2, NON_STRICT, max_k=6)[0] == 6


def test_min_bispanner_guard():
    # complete graph on 8 vertices, every edge at time 1: nothing is critical
    G = TemporalGraph(8, {e: [1] for e in itertools.combinations(range(8), 2)})
    with pytest.raises(SizeGuardError):
        min_bispanner_bruteforce(G, NON_STRICT)


def test_min_bispanner_saves_edges_when_possible():
    # triangle plus chord-free square all at one time: a star suffices
    G = TemporalGraph(4, {e: [1] for e in itertools.combinations(range(4), 2)})
    k, H = min_bispanner_bruteforce(G, NON_STRICT)
    assert k == 3
    assert is_bidirectionally_connected(H, NON_STRICT)


@settings(max_examples=60, deadline=None)
@given(temporal_graphs(max_n=5, max_tau=4, max_labels=2), settings_)
def test_min_bispanner_matches_subset_enumeration(G, setting):
    found = min_bispanner_bruteforce(G, setting)
    expected = oracles.min_bispanner_size(G, setting) if oracles.bidirectionally_connected(G, setting) else None
    assert (found[0] if found else None) == expected
    if found:
        k, H = found
        assert H.num_edges() == k and H.is_subgraph_of(G)
        assert is_bidirectionally_connected(H, setting)
        assert k <= build_bispanner(G, setting).num_edges()


@settings(max_examples=60, deadline=None)
@given(temporal_graphs(max_n=6, max_tau=4, simple=True))
def test_strict_simple_non_complete_has_no_bispanner(G):
    if G.num_edges() < G.n * (G.n - 1) // 2:
        assert min_bispanner_bruteforce(G, STRICT) is None


def test_critical_edges():
    k5 = random_happy_clique(random.Random(5), 5)
    assert critical_bispanner_edges(k5, STRICT) == k5.edge_keys()
    assert len(k5.edge_keys()) == 10
    path = TemporalGraph(4, {(0, 1): [2], (1, 2): [2], (2, 3): [2]})
    assert critical_bispanner_edges(path, NON_STRICT) == [(0, 1), (1, 2), (2, 3)]


def test_critical_edges_fig2(fig2):
    assert critical_bispanner_edges(fig2, NON_STRICT) == fig2.edge_keys()


def test_critical_edges_precondition(square):
    with pytest.raises(ValueError):
        critical_bispanner_edges(square, NON_STRICT)


def test_happy_cliques_are_tight():
    rng = random.Random(1)
    for n in (3, 4, 5):
        for _ in range(3):
            G = random_happy_clique(rng, n)
            assert classify(G).happy
            k, _ = min_bispanner_bruteforce(G, NON_STRICT)
            assert k == n * (n - 1) // 2


def test_simple_graphs_random_agreement():
    rng = random.Random(2)
    for _ in range(50):
        G = random_simple_graph(rng, rng.randint(1, 6), rng.randint(1, 3))
        for setting in Setting:
            assert tst_simple(G, setting).exists == tst_bruteforce(G, setting).exists
