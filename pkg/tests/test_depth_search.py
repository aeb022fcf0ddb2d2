import random

import pytest

from kreweras.bijection import phi
from kreweras.depth_search import (
    ChoiceCase,
    Graph,
    all_dfs_trees,
    as_graph,
    dfs_tree,
    enumerate_depth_trees,
    enumerate_dfs_trees_through,
    u_connected,
)
from kreweras.oracles import all_spanning_trees, map_classes
from kreweras.planar_map import MapError, TreeView, is_depth_tree, loop_map


def comparable_everywhere(m, tree):
    view = TreeView(m, tree)
    return all(view.comparable(u, v) for u, v, e in m.graph_edges() if e not in tree)


def class_maps(n):
    return [c.map for c in map_classes(n).values()]


def random_chooser(seed):
    rng = random.Random(seed)
    return lambda state, cands: rng.choice(list(cands))


# -- dfs_tree --------------------------------------------------------------


def test_single_vertex():
    assert dfs_tree(Graph(1, {}), 0) == frozenset()


def test_loop_map_gives_empty_tree():
    assert dfs_tree(loop_map()) == frozenset()


def test_disconnected_input():
    with pytest.raises(MapError):
        dfs_tree(Graph(2, {}), 0)


def test_bad_chooser():
    m = phi("caa").map
    with pytest.raises(ValueError):
        dfs_tree(m, chooser=lambda state, cands: -1)


def test_size_one_runs_give_depth_trees_without_root_edge():
    m = phi("caa").map
    trees = all_dfs_trees(m)
    root_edge = m.edge_of(m.root)
    kept = [t for t in trees if root_edge not in t]
    assert kept
    assert all(is_depth_tree(m, t) for t in kept)


def test_dfs_trees_have_comparable_external_edges():
    for m in class_maps(3):
        for s in range(5):
            t = dfs_tree(m, chooser=random_chooser(s))
            assert comparable_everywhere(m, t)


@pytest.mark.parametrize("n", [1, 2])
def test_dfs_characterisation(n):
    # a spanning tree has only comparable external edges iff some run builds it
    for m in class_maps(n):
        by_search = all_dfs_trees(m)
        by_filter = {t for t in all_spanning_trees(m) if comparable_everywhere(m, t)}
        assert by_search == by_filter


# -- enumeration -----------------------------------------------------------


def test_size_one_has_two_trees():
    (m,) = class_maps(1)
    e0 = m.edge_of(m.sigma[m.root])
    assert len(enumerate_dfs_trees_through(m, m.root_vertex, e0)) == 2
    assert len(enumerate_depth_trees(m)) == 2


def test_loop_map_has_one_depth_tree():
    assert enumerate_depth_trees(loop_map()) == {frozenset()}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_depth_trees_match_brute_force(n):
    for m in class_maps(n):
        fast = enumerate_depth_trees(m)
        slow = {t for t in all_spanning_trees(m) if is_depth_tree(m, t)}
        assert fast == slow
        assert len(fast) == 2**n
        r = m.root_vertex
        for t in fast:
            assert sum(1 for e in t if r in m.ends(e)) == 1


def test_depth_trees_match_phi_fibres():
    for n in range(1, 4):
        for cls in map_classes(n).values():
            assert set(cls.trees) == enumerate_depth_trees(cls.map)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_beta_count_and_gamma_invariance(n):
    for m in class_maps(n):
        v0 = m.root_vertex
        e0 = m.edge_of(m.sigma[m.root])
        traces = []
        trees = enumerate_dfs_trees_through(m, v0, e0, traces=traces)
        assert len(trees) == 2**n
        assert len(traces) >= len(trees)
        outcome = {}
        for trace in traces:
            betas = [r for r in trace if r.case is ChoiceCase.BETA]
            assert len(betas) == n
            tree = frozenset({e0} | {r.chosen for r in trace})
            assert tree in trees
            # the beta choices alone fix the outcome
            key = tuple(r.chosen for r in betas)
            assert outcome.setdefault(key, tree) == tree
        assert len(set(outcome.values())) == 2**n


def test_gamma_choices_occur_and_do_not_matter():
    seen_gamma = False
    for m in class_maps(3):
        traces = []
        enumerate_dfs_trees_through(m, m.root_vertex, m.edge_of(m.sigma[m.root]), traces=traces)
        seen_gamma |= any(r.case is ChoiceCase.GAMMA for t in traces for r in t)
    assert seen_gamma


def test_preconditions():
    (m,) = class_maps(1)
    with pytest.raises(MapError):
        enumerate_dfs_trees_through(loop_map(), 0, 0)
    with pytest.raises(MapError):
        enumerate_dfs_trees_through(m, m.root_vertex, m.edge_of(m.root) + 999)
    far = next(e for e in m.edges if m.root_vertex not in m.ends(e))
    with pytest.raises(MapError):
        enumerate_dfs_trees_through(m, m.root_vertex, far)
    # parallel edges only, with a cut vertex in the middle
    path = Graph(3, {0: (0, 1), 1: (0, 1), 2: (1, 2), 3: (1, 2)})
    with pytest.raises(MapError):
        enumerate_dfs_trees_through(path, 1, 0)


# -- U-connectivity --------------------------------------------------------


def test_u_connected_basics():
    g = Graph(3, {0: (0, 1), 1: (1, 2)})
    assert u_connected(g, set(), 2, 2)
    assert u_connected(g, {0, 1, 2}, 0, 2)
    assert not u_connected(g, set(), 0, 2)
    assert u_connected(g, {1}, 0, 2)


def test_visited_set_lemma():
    # the vertices seen between the first and the last visit of v are
    # exactly v and the unvisited vertices U-connected to v
    for m in class_maps(2):
        g = as_graph(m)
        for s in range(6):
            visits = []
            tree = dfs_tree(m, chooser=random_chooser(s), visits=visits)
            view = TreeView(m, tree)
            order = list(dict.fromkeys(visits))
            for k, v in enumerate(order):
                unvisited = set(order[k + 1 :])
                reach = {x for x in unvisited if u_connected(g, unvisited, v, x)} | {v}
                subtree = {x for x in range(m.vertex_count) if view.is_ancestor(v, x)}
                assert reach == subtree
