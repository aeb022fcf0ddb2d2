"""Uniform random generation of walks and maps in linear time.

Randomness comes from :class:`numpy.random.Generator` over ``PCG64``, seeded
with a 64-bit integer; it is stable across platforms and its bounded integer
sampling is unbiased.
"""

from __future__ import annotations

from typing import Union

import numpy as np

from .bijection import MarkedDepthMap, phi
from .planar_map import PlanarMap, dual, near_cubic_to_cubic
from .walks import PROJECTED_ALPHA, ProjectedWalk, Walk

__all__ = [
    "make_rng",
    "sample_projected",
    "sample_excursion",
    "sample_map",
    "TARGETS",
]

TARGETS = ("marked_depth", "near_cubic", "cubic", "triangulation")


def make_rng(seed: int) -> np.random.Generator:
    if not 0 <= seed < 2**64:
        raise ValueError("seed must fit in 64 unsigned bits")
    return np.random.Generator(np.random.PCG64(seed))


def _rotate_to_bridge(steps: np.ndarray) -> np.ndarray:
    """Cycle lemma: the unique rotation of a +2/-1 sequence summing to -1
    whose proper prefixes all have non-negative sum."""
    heights = np.cumsum(steps)
    start = (int(np.argmin(heights)) + 1) % len(steps)
    return np.roll(steps, -start)


def _projected_steps(n: int, rng: np.random.Generator) -> np.ndarray:
    word = np.full(3 * n + 1, -1, dtype=np.int8)
    word[:n] = 2
    rng.shuffle(word)
    return _rotate_to_bridge(word)[:-1]


def sample_projected(n: int, rng: np.random.Generator) -> ProjectedWalk:
    """Uniform projected walk of size ``n``.

    A word with ``n`` letters ``c`` and ``2n + 1`` letters ``α`` is shuffled,
    rotated to the unique good position, and its final ``α`` dropped.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    steps = _projected_steps(n, rng)
    table = np.array([PROJECTED_ALPHA, "c"])
    return ProjectedWalk("".join(table[(steps > 0).astype(np.int8)]))


def sample_excursion(n: int, rng: np.random.Generator) -> Walk:
    """Uniform excursion of size ``n``: a projected walk whose ``α``
    letters are each replaced by ``a`` or ``b`` with probability 1/2."""
    if n < 0:
        raise ValueError("n must be non-negative")
    steps = _projected_steps(n, rng)
    codes = np.full(3 * n, ord("c"), dtype=np.uint8)
    down = steps < 0
    codes[down] = ord("a") + rng.integers(0, 2, size=int(down.sum()), dtype=np.uint8)
    return Walk(codes.tobytes().decode("ascii"))


def sample_map(n: int, target: str, rng: np.random.Generator) -> Union[MarkedDepthMap, PlanarMap]:
    """Uniform random map of the requested kind built from a random excursion.

    ``marked_depth`` returns the decorated map of size ``n``; ``near_cubic``
    forgets the tree and the mark; ``cubic`` (size ``n - 1``, ``3n`` edges)
    also erases the root-vertex; ``triangulation`` is the dual of ``cubic``.
    """
    if target not in TARGETS:
        raise ValueError(f"unknown target {target!r}; expected one of {TARGETS}")
    if n < 0:
        raise ValueError("n must be non-negative")
    if target in ("cubic", "triangulation") and n < 1:
        raise ValueError(f"target {target} needs n >= 1")
    mdm = phi(sample_excursion(n, rng), check=False)
    if target == "marked_depth":
        return mdm
    if target == "near_cubic":
        return mdm.map
    cubic, _ = near_cubic_to_cubic(mdm.map)
    if target == "cubic":
        return cubic
    return dual(cubic)
