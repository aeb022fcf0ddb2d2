from collections import Counter
from itertools import combinations

import numpy as np
import pytest
from scipy.stats import chisquare

from kreweras.bijection import validate_marked_depth_map
from kreweras.planar_map import (
    bridges,
    canonical_code,
    dual,
    is_loopless_triangulation,
    loop_map,
    near_cubic_to_cubic,
)
from kreweras.sampler import (
    _rotate_to_bridge,
    make_rng,
    sample_excursion,
    sample_map,
    sample_projected,
)
from kreweras.walks import ProjectedWalk, classify, count, enumerate_walks, project


@pytest.mark.parametrize("n", range(5))
def test_cycle_lemma_by_exhaustion(n):
    # every cyclic arrangement of n up-steps among 3n+1 positions, rotated,
    # hits each projected walk exactly 3n+1 times
    hits = Counter()
    for ups in combinations(range(3 * n + 1), n):
        word = np.full(3 * n + 1, -1, dtype=np.int8)
        word[list(ups)] = 2
        steps = _rotate_to_bridge(word)
        assert steps[-1] == -1
        assert (np.cumsum(steps[:-1]) >= 0).all()
        hits[tuple(steps[:-1])] += 1
    assert len(hits) == count("projected", n)
    assert set(hits.values()) == {3 * n + 1}


def test_sample_projected_small_cases():
    rng = make_rng(0)
    assert sample_projected(0, rng) == ""
    assert all(sample_projected(1, rng) == "cαα" for _ in range(20))
    for _ in range(50):
        ProjectedWalk(sample_projected(4, rng))


def test_sample_projected_uniform_at_two():
    rng = make_rng(11)
    draws = Counter(sample_projected(2, rng) for _ in range(30000))
    expected = {project(w) for w in enumerate_walks("excursion", 2)}
    assert set(draws) == expected and len(expected) == 3
    assert chisquare(list(draws.values())).pvalue > 0.001


def test_sample_excursion_uniform_at_one():
    rng = make_rng(12)
    draws = Counter(sample_excursion(1, rng) for _ in range(40000))
    assert set(draws) == {"caa", "cab", "cba", "cbb"}
    assert chisquare(list(draws.values())).pvalue > 0.001


def test_sample_excursion_uniform_at_two():
    rng = make_rng(13)
    draws = Counter(sample_excursion(2, rng) for _ in range(48000))
    assert set(draws) == set(enumerate_walks("excursion", 2))
    assert chisquare(list(draws.values())).pvalue > 0.001


def test_sampled_walks_are_excursions():
    rng = make_rng(14)
    assert sample_excursion(0, rng) == ""
    for _ in range(10000):
        assert classify(sample_excursion(50, rng)).is_excursion


def test_determinism():
    codes = {sample_map(6, "marked_depth", make_rng(99)).code() for _ in range(3)}
    assert len(codes) == 1
    walks = {sample_excursion(30, make_rng(5)) for _ in range(3)}
    assert len(walks) == 1


def test_seed_range():
    with pytest.raises(ValueError):
        make_rng(-1)
    with pytest.raises(ValueError):
        make_rng(2**64)


def test_targets():
    rng = make_rng(21)
    mdm = sample_map(0, "marked_depth", rng)
    assert canonical_code(mdm.map) == canonical_code(loop_map())
    assert mdm.marked == mdm.root_edge
    validate_marked_depth_map(sample_map(5, "marked_depth", rng))
    nc = sample_map(5, "near_cubic", rng)
    assert not bridges(nc) and nc.edge_count == 16
    cubic = sample_map(5, "cubic", rng)
    assert all(d == 3 for d in cubic.degrees) and cubic.edge_count == 15
    tri = sample_map(1, "triangulation", rng)
    assert is_loopless_triangulation(tri)
    back = dual(tri)
    assert back.edge_count == 3 and all(d == 3 for d in back.degrees) and not bridges(back)


def test_target_errors():
    rng = make_rng(0)
    with pytest.raises(ValueError):
        sample_map(0, "cubic", rng)
    with pytest.raises(ValueError):
        sample_map(0, "triangulation", rng)
    with pytest.raises(ValueError):
        sample_map(2, "tree", rng)
    with pytest.raises(ValueError):
        sample_map(-1, "near_cubic", rng)


def test_structure_at_twenty():
    rng = make_rng(22)
    for _ in range(200):
        m = sample_map(20, "near_cubic", rng)
        assert not bridges(m)
        c, _ = near_cubic_to_cubic(m)
        assert not bridges(c)
        assert is_loopless_triangulation(dual(c))
