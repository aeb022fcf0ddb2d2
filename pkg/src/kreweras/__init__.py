"""Kreweras walks and bridgeless near-cubic maps.

Walks on the alphabet ``{a, b, c}`` (West, South, North-East steps) are put
in bijection with 2-near-cubic maps carrying a depth tree and a marked
external edge.  The package provides the walk families and their counting
formulas, a rotation-system map type, the bijection and its inverse,
depth-first search trees, and a linear-time uniform sampler.
"""

from .bijection import MarkedDepthMap, TreeGrowingMap, phi, psi
from .depth_search import dfs_tree, enumerate_depth_trees
from .planar_map import PlanarMap, build, canonical_code, dual
from .sampler import make_rng, sample_excursion, sample_map
from .walks import Walk, classify, count, enumerate_walks

__version__ = "0.1.0"

__all__ = [
    "Walk",
    "classify",
    "count",
    "enumerate_walks",
    "PlanarMap",
    "build",
    "canonical_code",
    "dual",
    "TreeGrowingMap",
    "MarkedDepthMap",
    "phi",
    "psi",
    "dfs_tree",
    "enumerate_depth_trees",
    "make_rng",
    "sample_excursion",
    "sample_map",
]
