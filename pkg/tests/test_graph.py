import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from interval_enum.graph import CanonicalForm, Graph, canonicalize, is_isomorphic
from interval_enum.graph6 import Graph6Error, from_graph6, to_graph6

from helpers import all_labeled_graphs, brute_force_isomorphic, brute_force_key


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, (p for p, keep in zip(pairs, chosen) if keep))


def test_graph_rejects_asymmetric_and_loops():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0b00))
    with pytest.raises(ValueError):
        Graph(1, (0b1,))
    with pytest.raises(ValueError):
        Graph(33, (0,) * 33)


def test_empty_graph_key():
    assert canonicalize(Graph.empty(0)) == CanonicalForm(0, 0)


def test_edge_key_stable_under_swap():
    g = Graph.from_edges(2, [(0, 1)])
    assert canonicalize(g) == canonicalize(g.relabel([1, 0]))


def test_p3_and_triangle():
    p3 = Graph.from_edges(3, [(0, 1), (1, 2)])
    p3_other = Graph.from_edges(3, [(1, 0), (0, 2)])
    k3 = Graph.complete(3)
    assert canonicalize(p3) == canonicalize(p3_other)
    assert canonicalize(p3) != canonicalize(k3)
    assert is_isomorphic(p3, p3_other)
    assert not is_isomorphic(p3, k3)


def test_c5_reversed():
    c5 = Graph.cycle(5)
    assert is_isomorphic(c5, c5.relabel([4, 3, 2, 1, 0]))


def test_key_round_trips_to_isomorphic_graph():
    g = Graph.from_edges(6, [(0, 3), (3, 5), (5, 1), (1, 2), (2, 4)])
    form = canonicalize(g)
    h = form.to_graph()
    assert brute_force_isomorphic(g, h)
    assert canonicalize(h) == form


def test_relabel_invariance_random():
    rng = random.Random(1234)
    for _ in range(1000):
        n = rng.randint(0, 8)
        g = Graph.from_edges(n, ((u, v) for v in range(n) for u in range(v) if rng.random() < 0.4))
        perm = list(range(n))
        rng.shuffle(perm)
        assert canonicalize(g) == canonicalize(g.relabel(perm))


@settings(max_examples=200, deadline=None)
@given(graphs(), st.randoms(use_true_random=False))
def test_relabel_invariance_property(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonicalize(g.relabel(perm)) == canonicalize(g)


@pytest.mark.parametrize("n", range(6))
def test_keys_separate_exactly_the_isomorphism_classes(n):
    # Equal keys iff equal brute-force minimum over all n! orderings.
    ours = {}
    brute = {}
    for g in all_labeled_graphs(n):
        ours.setdefault(canonicalize(g), set()).add(g.adj)
        brute.setdefault(brute_force_key(g), set()).add(g.adj)
    assert sorted(map(frozenset, ours.values()), key=sorted) == sorted(map(frozenset, brute.values()), key=sorted)


def test_class_counts_for_small_n():
    # numbers of graphs on n unlabelled vertices, from the brute-force oracle
    for n, expected in [(0, 1), (1, 1), (2, 2), (3, 4), (4, 11)]:
        assert len({brute_force_key(g) for g in all_labeled_graphs(n)}) == expected
        assert len({canonicalize(g) for g in all_labeled_graphs(n)}) == expected


def test_highly_symmetric_graphs_are_fast():
    for n in (12, 20, 32):
        assert canonicalize(Graph.empty(n)) == CanonicalForm(n, 0)
        assert canonicalize(Graph.complete(n)).bits == (1 << (n * (n - 1) // 2)) - 1
    matching = Graph.from_edges(20, [(2 * i, 2 * i + 1) for i in range(10)])
    shuffled = matching.relabel(list(range(19, -1, -1)))
    assert canonicalize(matching) == canonicalize(shuffled)


# graph6


def test_graph6_examples():
    assert to_graph6(Graph.complete(2)) == "A_"
    assert from_graph6("A_") == Graph.complete(2)
    assert to_graph6(Graph.empty(1)) == "@"
    assert from_graph6("@") == Graph.empty(1)
    assert to_graph6(Graph.empty(0)) == "?"


@pytest.mark.parametrize("n", range(6))
def test_graph6_matches_networkx_and_round_trips(n):
    for g in all_labeled_graphs(n):
        text = to_graph6(g)
        nxg = nx.Graph()
        nxg.add_nodes_from(range(n))
        nxg.add_edges_from(g.edges())
        assert text == nx.to_graph6_bytes(nxg, header=False).decode().strip()
        assert from_graph6(text) == g


def test_graph6_larger_graph_round_trip():
    rng = random.Random(7)
    g = Graph.from_edges(32, ((u, v) for v in range(32) for u in range(v) if rng.random() < 0.3))
    assert from_graph6(to_graph6(g)) == g
    assert from_graph6(">>graph6<<" + to_graph6(g)) == g


@pytest.mark.parametrize("bad", ["", "A", "A__", "A\x7f", "A ", "Bw?", "~?@?", "a" + "?" * 100, "A`"])
def test_graph6_rejects_malformed(bad):
    with pytest.raises(Graph6Error):
        from_graph6(bad)
