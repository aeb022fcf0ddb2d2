"""Brute-force ground truth for the counting identities.

Everything here is exhaustive and guarded: inputs past the guard raise
instead of returning partial answers.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Dict, List, Set, Tuple

from .bijection import MarkedDepthMap, phi
from .depth_search import as_graph
from .planar_map import (
    PlanarMap,
    SpanningTree,
    canonical_code,
    canonical_form,
    is_non_separable,
    near_cubic_size,
)
from .walks import enumerate_walks

__all__ = [
    "FiberReport",
    "ExtensionReport",
    "MapClass",
    "MAX_FIBER_SIZE",
    "MAX_TREE_EDGES",
    "all_spanning_trees",
    "fiber_report",
    "map_classes",
    "extension_report",
]

MAX_FIBER_SIZE = 3
MAX_TREE_EDGES = 16


def all_spanning_trees(m) -> Set[SpanningTree]:
    """Every spanning tree, by filtering all ``V - 1`` edge subsets."""
    g = as_graph(m)
    edges = sorted(g.ends)
    if len(edges) > MAX_TREE_EDGES:
        raise ValueError(f"{len(edges)} edges exceed the oracle guard of {MAX_TREE_EDGES}")
    nv = g.vertex_count
    out: Set[SpanningTree] = set()
    for subset in combinations(edges, nv - 1):
        parent = list(range(nv))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in subset:
            ru, rv = find(g.ends[e][0]), find(g.ends[e][1])
            if ru == rv:
                break
            parent[ru] = rv
        else:
            out.add(frozenset(subset))
    return out


@dataclass
class MapClass:
    """A rooted map up to isomorphism, in canonical labels, with the
    decorations met among the images of one size."""

    map: PlanarMap
    trees: Dict[SpanningTree, int] = field(default_factory=dict)
    marked_count: int = 0


def map_classes(n: int) -> Dict[bytes, MapClass]:
    """Images of all excursions of size ``n`` grouped by undecorated map.

    Trees are stored in the canonical labelling of the class, with the
    number of images carrying each tree.
    """
    if n > MAX_FIBER_SIZE:
        raise ValueError(f"n = {n} exceeds the exhaustive guard {MAX_FIBER_SIZE}")
    classes: Dict[bytes, MapClass] = {}
    for w in enumerate_walks("excursion", n):
        mdm = phi(w)
        cm, ct, _ = canonical_form(mdm.map, mdm.tree, mdm.marked)
        key = canonical_code(cm)
        cls = classes.setdefault(key, MapClass(cm))
        cls.trees[ct] = cls.trees.get(ct, 0) + 1
        cls.marked_count += 1
    return classes


@dataclass(frozen=True)
class FiberReport:
    n: int
    excursion_count: int
    marked_object_count: int
    depth_map_class_count: int
    map_class_count: int
    depth_map_fiber_sizes: List[int]
    map_fiber_sizes: List[int]
    root_marked_count: int

    @property
    def injective(self) -> bool:
        return self.marked_object_count == self.excursion_count

    @property
    def fibers_constant(self) -> bool:
        return self.depth_map_fiber_sizes == [self.n + 1] and self.map_fiber_sizes == [
            2**self.n * (self.n + 1)
        ]

    def as_dict(self) -> dict:
        d = asdict(self)
        d["injective"] = self.injective
        d["fibers_constant"] = self.fibers_constant
        return d


def fiber_report(n: int) -> FiberReport:
    """Apply the bijection to every excursion of size ``n`` and bucket the
    images at three decoration levels."""
    if not 0 <= n <= MAX_FIBER_SIZE:
        raise ValueError(f"n must be in 0..{MAX_FIBER_SIZE}")
    walks = enumerate_walks("excursion", n)
    marked: Set[bytes] = set()
    depth_fibers: Dict[bytes, int] = defaultdict(int)
    map_fibers: Dict[bytes, int] = defaultdict(int)
    root_marked = 0
    for w in walks:
        mdm = phi(w)
        marked.add(mdm.code())
        depth_fibers[mdm.code(mark=False)] += 1
        map_fibers[mdm.code(tree=False, mark=False)] += 1
        if mdm.marked == mdm.root_edge:
            root_marked += 1
    return FiberReport(
        n=n,
        excursion_count=len(walks),
        marked_object_count=len(marked),
        depth_map_class_count=len(depth_fibers),
        map_class_count=len(map_fibers),
        depth_map_fiber_sizes=sorted(set(depth_fibers.values())),
        map_fiber_sizes=sorted(set(map_fibers.values())),
        root_marked_count=root_marked,
    )


@dataclass(frozen=True)
class ExtensionReport:
    n: int
    i: int
    walk_count: int
    all_structured: bool
    map_class_count: int
    fiber_sizes: List[int]
    failures: List[Tuple[str, str]]


def _extension_failure(mdm: MarkedDepthMap) -> str:
    m = mdm.map
    if near_cubic_size(m) != (mdm.size, mdm.target + 2):
        return "not near-cubic"
    if not is_non_separable(m):
        return "separable"
    if mdm.marked != mdm.root_edge:
        return "mark is not the root-edge"
    if m.edge_of(m.sigma[m.root]) not in mdm.tree:
        return "edge after the root is external"
    return ""


def extension_report(n: int, i: int) -> ExtensionReport:
    """Check every Kreweras walk of size ``n`` ending at ``(i, 0)``."""
    walks = enumerate_walks("kreweras_to", n, i)
    fibers: Dict[bytes, int] = defaultdict(int)
    failures = []
    for w in walks:
        mdm = phi(w, i)
        why = _extension_failure(mdm)
        if why:
            failures.append((str(w), why))
        fibers[mdm.code(tree=False, mark=False)] += 1
    return ExtensionReport(
        n=n,
        i=i,
        walk_count=len(walks),
        all_structured=not failures,
        map_class_count=len(fibers),
        fiber_sizes=sorted(set(fibers.values())),
        failures=failures,
    )
