"""Constructive list coloring: greedy slack, complete graphs, odd cycles,
frames, and the degree-choosability machinery."""

import itertools
import random

import pytest

import oracles
from wdcolor.exact import list_color_exact
from wdcolor.graphs import Graph
from wdcolor.listcolor import (DependencyColoringError,
                               color_complete_with_lists,
                               color_dependency_graph,
                               color_odd_cycle_with_lists, degree_choose,
                               find_even_frame, greedy_with_slack, pick_color)


def subsets(universe, size):
    return [frozenset(c) for c in itertools.combinations(universe, size)]


def check_in_lists(g, lists, c):
    assert set(c) == set(g.vertices())
    for v in g.vertices():
        assert c[v] in lists[v]
    for u, v in g.edges():
        assert c[u] != c[v]


def test_pick_color_prefers_order_then_smallest():
    assert pick_color({3, 1, 2}) == 1
    assert pick_color({3, 1, 2}, order=(2, 9, 3)) == 2
    assert pick_color({8, 9}, order=(1, 2)) == 8
    with pytest.raises(ValueError):
        pick_color([])


def test_greedy_with_slack_on_random_graphs():
    rng = random.Random(2)
    for _ in range(40):
        g = oracles.random_connected_graph(rng.randint(2, 7), rng, p=0.5)
        slack = rng.choice(g.vertices())
        lists = {}
        for v in g.vertices():
            size = g.degree(v) + (1 if v == slack else 0)
            size = max(size, 1)
            lists[v] = frozenset(rng.sample(range(1, 9), size))
        c = greedy_with_slack(g, lists, slack)
        check_in_lists(g, lists, c)


def test_greedy_with_slack_rejects_bad_input():
    g = Graph.from_edges([(0, 1), (1, 2), (0, 2)])
    tight = {v: frozenset({1, 2}) for v in g.vertices()}
    with pytest.raises(ValueError):
        greedy_with_slack(g, tight, 0)  # no slack at the slack vertex
    with pytest.raises(ValueError):
        greedy_with_slack(Graph.from_edges([(0, 1), (2, 3)]),
                          {v: frozenset({1, 2}) for v in range(4)}, 0)


def test_complete_lists_exhaustive_small():
    # every list pattern from a 4-color universe on K3 and K4
    for n in (2, 3, 4):
        vs = list(range(n))
        options = subsets(range(1, 5), n - 1)
        for pattern in itertools.product(options, repeat=n):
            lists = dict(zip(vs, pattern))
            if set(lists[vs[0]]) == set(lists[vs[-1]]):
                with pytest.raises(ValueError):
                    color_complete_with_lists(vs, lists)
                continue
            c = color_complete_with_lists(vs, lists)
            assert len(set(c.values())) == n
            for v in vs:
                assert c[v] in lists[v]


def test_odd_cycle_lists_exhaustive_triangle_and_c5():
    for k in (3, 5):
        cycle = list(range(k))
        options = subsets(range(1, 5), 2)
        for pattern in itertools.product(options, repeat=k):
            lists = dict(zip(cycle, pattern))
            if set(lists[0]) == set(lists[k - 1]):
                continue
            c = color_odd_cycle_with_lists(cycle, lists)
            g = Graph.from_edges([(i, (i + 1) % k) for i in range(k)])
            check_in_lists(g, lists, c)


def test_odd_cycle_rejects_even_or_equal_end_lists():
    with pytest.raises(ValueError):
        color_odd_cycle_with_lists([0, 1, 2, 3],
                                   {v: frozenset({1, 2}) for v in range(4)})
    with pytest.raises(ValueError):
        color_odd_cycle_with_lists([0, 1, 2],
                                   {v: frozenset({1, 2}) for v in range(3)})


def test_find_even_frame_structure():
    rng = random.Random(4)
    found = 0
    for _ in range(60):
        g = oracles.random_connected_graph(rng.randint(4, 8), rng, p=0.55)
        dec_blocks = [g.induced_subgraph(c)
                      for c in g.connected_components()]
        sub = dec_blocks[0]
        # need 2-connected, not complete, not an odd cycle
        if any(sub.degree(v) < 2 for v in sub.vertices()):
            continue
        if sub.m == sub.n * (sub.n - 1) // 2:
            continue
        if sub.m == sub.n and sub.n % 2 == 1 \
                and all(sub.degree(v) == 2 for v in sub.vertices()):
            continue
        try:
            cycle, chord = find_even_frame(sub)
        except ValueError:
            continue  # not 2-connected after all
        found += 1
        k = len(cycle)
        assert k % 2 == 0 and k >= 4
        assert len(set(cycle)) == k
        for i in range(k):
            assert sub.has_edge(cycle[i], cycle[(i + 1) % k])
        induced = sub.induced_subgraph(cycle)
        if chord is None:
            assert induced.m == k
        else:
            u, v = chord
            assert sub.has_edge(u, v)
            assert u in cycle and v in cycle
            assert induced.m == k + 1
    assert found >= 10


def test_degree_choose_output_or_principled_refusal():
    rng = random.Random(6)
    successes = refusals = 0
    for _ in range(150):
        g = oracles.random_connected_graph(rng.randint(2, 8), rng, p=0.45)
        lists = {v: frozenset(rng.sample(range(1, 9),
                                         max(1, g.degree(v))))
                 for v in g.vertices()}
        c = degree_choose(g, lists)
        if c is None:
            refusals += 1
            # refusal is only allowed in the tight Gallai-tree case
            assert all(len(lists[v]) == g.degree(v) for v in g.vertices())
        else:
            successes += 1
            check_in_lists(g, lists, c)
            assert list_color_exact(
                g, {v: set(lists[v]) for v in g.vertices()}) is not None
    assert successes >= 50


def test_degree_choose_slack_always_succeeds():
    rng = random.Random(8)
    for _ in range(40):
        g = oracles.random_connected_graph(rng.randint(2, 7), rng, p=0.5)
        lists = {v: frozenset(rng.sample(range(1, 10), g.degree(v) + 1))
                 for v in g.vertices()}
        c = degree_choose(g, lists)
        assert c is not None
        check_in_lists(g, lists, c)


def test_degree_choose_refuses_odd_cycle_with_equal_lists():
    c5 = Graph.from_edges([(i, (i + 1) % 5) for i in range(5)])
    lists = {v: frozenset({1, 2}) for v in range(5)}
    assert degree_choose(c5, lists) is None  # genuinely uncolorable
    assert list_color_exact(c5, {v: {1, 2} for v in range(5)}) is None


def test_degree_choose_non_gallai_tight_lists_succeed():
    # even cycle with tight equal lists: not a Gallai tree, must succeed
    c6 = Graph.from_edges([(i, (i + 1) % 6) for i in range(6)])
    lists = {v: frozenset({1, 2}) for v in range(6)}
    c = degree_choose(c6, lists)
    assert c is not None
    check_in_lists(c6, lists, c)


def test_degree_choose_validates_input():
    g = Graph.from_edges([(0, 1), (2, 3)])
    with pytest.raises(ValueError):
        degree_choose(g, {v: frozenset({1}) for v in range(4)})
    tri = Graph.from_edges([(0, 1), (1, 2), (0, 2)])
    with pytest.raises(ValueError):
        degree_choose(tri, {0: frozenset({1}), 1: frozenset({1, 2}),
                            2: frozenset({1, 2})})


def test_color_dependency_graph_components_and_hooks():
    # two components: a triangle with rainbow-capable lists and an edge
    g = Graph.from_edges([(0, 1), (1, 2), (0, 2), (3, 4)])
    lists = {0: [1, 2], 1: [2, 3], 2: [1, 3], 3: [1], 4: [1, 2]}
    c = color_dependency_graph(g, lists)
    check_in_lists(g, {v: frozenset(lists[v]) for v in lists}, c)

    # blocked component: C5 with equal 2-lists; the hook widens one list
    c5 = Graph.from_edges([(i, (i + 1) % 5) for i in range(5)])
    blocked = {v: [1, 2] for v in range(5)}
    calls = []

    def hook(component):
        calls.append(sorted(component))
        fresh = {v: [1, 2] for v in range(5)}
        fresh[0] = [1, 2, 3]
        return fresh

    c = color_dependency_graph(c5, blocked, perturbation_hook=hook)
    assert calls == [[0, 1, 2, 3, 4]]
    assert all(c[u] != c[v] for u, v in c5.edges())

    with pytest.raises(DependencyColoringError):
        color_dependency_graph(c5, blocked)
    with pytest.raises(DependencyColoringError):
        color_dependency_graph(c5, blocked,
                               perturbation_hook=lambda comp: None)
    with pytest.raises(ValueError):
        color_dependency_graph(c5, {v: [1] for v in range(5)})
