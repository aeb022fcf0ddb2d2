import math
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kreweras.walks import (
    CountKind,
    MalformedWalkError,
    ProjectedWalk,
    Walk,
    all_words,
    classify,
    count,
    enumerate_walks,
    project,
)

words = st.text(alphabet="abc", max_size=30)


def positions(w):
    x = y = 0
    yield x, y
    for letter in w:
        dx, dy = {"a": (-1, 0), "b": (0, -1), "c": (1, 1)}[letter]
        x, y = x + dx, y + dy
        yield x, y


def brute_quadrant_to(w, target):
    pts = list(positions(w))
    return all(x >= 0 and y >= 0 for x, y in pts) and pts[-1] == target


def brute_excursion(w):
    pts = list(positions(w))
    return all(x + y >= 0 for x, y in pts) and sum(pts[-1]) == 0


# -- Walk ------------------------------------------------------------------


def test_walk_counts_and_endpoint():
    w = Walk("cbcccbbcaaaaabb")
    assert (w.na, w.nb, w.nc) == (5, 5, 5)
    assert w.endpoint == (0, 0)


@given(words)
def test_endpoint_matches_running_sum(s):
    w = Walk(s)
    assert w.na + w.nb + w.nc == len(w)
    assert w.endpoint == list(positions(s))[-1]
    assert list(w.path())[-1] == w.endpoint


@pytest.mark.parametrize("bad", ["abd", "x", "ab c", "A"])
def test_malformed_walk_rejected(bad):
    with pytest.raises(MalformedWalkError):
        Walk(bad)
    with pytest.raises(ValueError):
        classify(bad)


def test_projected_walk_validation():
    assert ProjectedWalk("cαα").size == 1
    with pytest.raises(ValueError):
        ProjectedWalk("αcα")
    with pytest.raises(ValueError):
        ProjectedWalk("cα")


# -- classify --------------------------------------------------------------


def test_classify_origin_example():
    c = classify("cbcccbbcaaaaabb")
    assert c.is_kreweras_to_origin
    assert c.size == 5
    assert c.endpoint == (0, 0)


def test_classify_excursion_not_kreweras():
    c = classify("cacbaaccaaba")
    assert c.is_excursion
    assert c.size == 4
    assert c.endpoint == (-2, 2)
    assert not c.kreweras_prefix_ok
    assert c.kreweras_target is None


def test_classify_empty_word():
    c = classify("")
    assert c.is_meander and c.is_excursion and c.kreweras_prefix_ok
    assert c.is_kreweras_to_origin
    assert c.kreweras_target == 0
    assert c.size == 0


def test_classify_single_west_step():
    c = classify("a")
    assert not c.is_meander
    assert not c.is_excursion
    assert c.size is None


@pytest.mark.parametrize("length", range(0, 8))
def test_classify_agrees_with_brute_force(length):
    for w in all_words(length):
        c = classify(w)
        assert c.is_excursion == brute_excursion(w)
        assert c.is_kreweras_to_origin == brute_quadrant_to(w, (0, 0))
        ends = [i for i in range(length + 1) if brute_quadrant_to(w, (i, 0))]
        assert c.kreweras_target == (ends[0] if ends else None)


@given(words)
def test_classification_implications(s):
    c = classify(s)
    if c.is_kreweras_to_origin:
        assert c.is_excursion
    if c.is_excursion:
        assert c.is_meander
        assert c.size == len(s) // 3
    if c.kreweras_target is not None:
        assert len(s) == 3 * c.size + 2 * c.kreweras_target
    x, y = c.endpoint
    assert (c.size is not None) == (x + y == 0 or (y == 0 and x > 0))


# -- count -----------------------------------------------------------------


@pytest.mark.parametrize(
    "kind,n,i,expected",
    [
        ("kreweras_origin", 1, None, 2),
        ("excursion", 1, None, 4),
        ("kreweras_origin", 5, None, 46592),
        ("cubic", 1, None, 1),
        ("cubic", 2, None, 4),
        ("kreweras_to", 0, 2, 2),
        ("projected", 2, None, 3),
        ("depth_map", 1, None, 2),
    ],
)
def test_count_examples(kind, n, i, expected):
    assert count(kind, n, i) == expected


def test_count_brute_force_small():
    # counts by filtering every word of the right length
    for n in range(3):
        ws = list(all_words(3 * n))
        assert count("excursion", n) == sum(map(brute_excursion, ws))
        assert count("kreweras_origin", n) == sum(brute_quadrant_to(w, (0, 0)) for w in ws)
    for i in range(1, 3):
        ws = list(all_words(2 * i))
        assert count("kreweras_to", 0, i) == sum(brute_quadrant_to(w, (i, 0)) for w in ws)
    ws = list(all_words(5))
    assert count("kreweras_to", 1, 1) == sum(brute_quadrant_to(w, (1, 0)) for w in ws)


def test_count_parameter_errors():
    with pytest.raises(ValueError):
        count("kreweras_to", 2)
    with pytest.raises(ValueError):
        count("excursion", 2, 1)
    with pytest.raises(ValueError):
        count("excursion", -1)
    with pytest.raises(ValueError):
        count("no_such_kind", 1)


def test_count_is_exact_for_large_n():
    value = count("kreweras_origin", 200)
    assert isinstance(value, int)
    assert value * 201 * 401 == 4**200 * math.comb(600, 200)


@pytest.mark.parametrize("n", range(7))
def test_kreweras_to_zero_collapses(n):
    assert count("kreweras_to", n, 0) == count("kreweras_origin", n)


@pytest.mark.parametrize("n", range(9))
def test_count_identities(n):
    assert count("excursion", n) == 4**n * count("projected", n)
    assert count("depth_map", n) * (n + 1) == count("excursion", n)
    assert count("cubic", n) * 2**n == count("depth_map", n)


def test_kreweras_to_versus_near_cubic():
    for n, i in product(range(6), range(4)):
        assert count("kreweras_to", n, i) == 2**n * count("near_cubic_to", n, i)


# -- enumerate -------------------------------------------------------------


def test_enumerate_examples():
    assert enumerate_walks("kreweras_origin", 1) == ["cab", "cba"]
    assert enumerate_walks("excursion", 1) == ["caa", "cab", "cba", "cbb"]
    assert enumerate_walks("excursion", 0) == [""]


@pytest.mark.parametrize("n", range(5))
def test_enumerate_matches_count(n):
    for kind in ("kreweras_origin", "excursion"):
        ws = enumerate_walks(kind, n)
        assert len(ws) == count(kind, n)
        assert ws == sorted(set(ws))


def test_enumerate_members_classify_into_family():
    for w in enumerate_walks("excursion", 3):
        assert classify(w).is_excursion
    for w in enumerate_walks("kreweras_origin", 3):
        assert classify(w).is_kreweras_to_origin
    for n, i in [(0, 3), (1, 2), (2, 1)]:
        ws = enumerate_walks("kreweras_to", n, i)
        assert len(ws) == count("kreweras_to", n, i)
        assert all(classify(w).kreweras_target == i for w in ws)


def test_enumerate_guard_and_arguments():
    with pytest.raises(ValueError):
        enumerate_walks("excursion", 8)
    with pytest.raises(ValueError):
        enumerate_walks("kreweras_to", 1)
    with pytest.raises(ValueError):
        enumerate_walks("cubic", 1)


# -- project ---------------------------------------------------------------


@pytest.mark.parametrize(
    "w,expected", [("cacbaaccaaba", "cαcαααccαααα"), ("", ""), ("caa", "cαα")]
)
def test_project_examples(w, expected):
    assert project(w) == expected


def test_project_rejects_non_excursion():
    with pytest.raises(ValueError):
        project("a")


@settings(max_examples=50)
@given(st.integers(0, 3))
def test_projection_is_four_to_one(n):
    images = {}
    for w in enumerate_walks("excursion", n):
        images.setdefault(project(w), []).append(w)
    assert len(images) == count("projected", n)
    assert all(len(v) == 4**n for v in images.values())
    assert CountKind("projected") is CountKind.PROJECTED
