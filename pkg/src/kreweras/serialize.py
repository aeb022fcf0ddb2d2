"""JSON and Graphviz DOT formats for maps and their decorations.

JSON layout::

    {"H": 4, "sigma": [...], "alpha": [int or null, ...], "root": 0,
     "head": null, "tree": [edge ids] or null, "marked": edge id or null}
"""

from __future__ import annotations

import json
from typing import Iterable, Optional, Tuple

from .bijection import MarkedDepthMap, TreeGrowingMap
from .planar_map import MapError, PlanarMap, SpanningTree, TreeView, build

__all__ = ["map_to_dict", "map_from_dict", "mdm_from_dict", "dumps", "loads", "to_dot"]

_KEYS = {"H", "sigma", "alpha", "root", "head", "tree", "marked"}


def map_to_dict(m: PlanarMap, tree: Optional[Iterable[int]] = None, marked: Optional[int] = None) -> dict:
    return {
        "H": m.H,
        "sigma": list(m.sigma),
        "alpha": list(m.alpha),
        "root": m.root,
        "head": m.head,
        "tree": None if tree is None else sorted(tree),
        "marked": marked,
    }


def dumps(obj) -> str:
    """One-line JSON for a map, tree-growing map or marked depth-map."""
    if isinstance(obj, MarkedDepthMap):
        d = map_to_dict(obj.map, obj.tree, obj.marked)
    elif isinstance(obj, TreeGrowingMap):
        d = map_to_dict(obj.map, obj.tree)
    else:
        d = map_to_dict(obj)
    return json.dumps(d, separators=(",", ":"))


def map_from_dict(d: dict) -> Tuple[PlanarMap, Optional[SpanningTree], Optional[int]]:
    if not isinstance(d, dict):
        raise MapError("map JSON must be an object")
    missing = {"sigma", "alpha", "root"} - d.keys()
    if missing:
        raise MapError(f"map JSON lacks {sorted(missing)}")
    extra = d.keys() - _KEYS
    if extra:
        raise MapError(f"unexpected keys {sorted(extra)}")
    if "H" in d and d["H"] != len(d["sigma"]):
        raise MapError("H does not match the length of sigma")
    m = build(d["sigma"], d["alpha"], d["root"], d.get("head"))
    tree = d.get("tree")
    return m, None if tree is None else frozenset(tree), d.get("marked")


def mdm_from_dict(d: dict) -> MarkedDepthMap:
    m, tree, marked = map_from_dict(d)
    if tree is None or marked is None:
        raise MapError("a marked depth-map needs both 'tree' and 'marked'")
    TreeView(m, tree)
    return MarkedDepthMap(m, tree, marked, m.degree(m.root_vertex) - 2)


def loads(text: str) -> Tuple[PlanarMap, Optional[SpanningTree], Optional[int]]:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MapError(f"malformed JSON: {exc}") from None
    return map_from_dict(d)


def to_dot(m: PlanarMap, tree: Optional[Iterable[int]] = None, marked: Optional[int] = None) -> str:
    """Tree edges bold, the marked edge dashed, the root drawn as an arrow
    onto the root-vertex and the head as an arrow leaving the head-vertex."""
    tree = set(tree or ())
    lines = ["graph map {", '  node [shape=circle, fontsize=10];']
    for v in range(m.vertex_count):
        lines.append(f"  v{v} [label=\"{v}\"];")
    for u, v, e in m.graph_edges():
        attrs = [f'label="{e}"']
        if e in tree:
            attrs.append("style=bold, penwidth=3")
        if e == marked:
            attrs.append("style=dashed")
        lines.append(f"  v{u} -- v{v} [{', '.join(attrs)}];")
    for h in m.legs:
        if h in (m.root, m.head):
            continue
        lines.append(f'  leg{h} [shape=point, label=""];')
        lines.append(f"  v{m.vertex_of[h]} -- leg{h};")
    lines.append('  root [shape=none, label="root"];')
    lines.append(f"  root -- v{m.root_vertex} [dir=forward];")
    if m.head is not None:
        lines.append('  head [shape=none, label="head"];')
        lines.append(f"  v{m.head_vertex} -- head [dir=forward];")
    lines.append("}")
    return "\n".join(lines) + "\n"
