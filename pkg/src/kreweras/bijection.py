"""Walks to decorated near-cubic maps and back.

A walk is read from right to left.  Each letter acts on a *tree-growing
map* (a growing map with a distinguished spanning tree):

* ``a`` / ``b`` turn the head into a tree edge ending at a new vertex that
  carries the new head and one more leg, placed first (``a``) or last
  (``b``) in the tour of the head-face;
* ``c`` glues the head to whichever of the first and last legs ends at the
  ancestor vertex; the other one becomes the head.

Closing the final state (gluing the head to the only remaining leg) gives a
bridgeless near-cubic map with a depth tree and a marked external edge.
The inverse reads letters off the opened map until nothing is readable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import chain
from typing import Iterator, List, Optional, Tuple

from .planar_map import (
    MapError,
    PlanarMap,
    SpanningTree,
    TreeView,
    _compact,
    bridges,
    build,
    canonical_code,
    head_face_legs,
    is_non_separable,
    near_cubic_size,
)
from .walks import Walk, classify

__all__ = [
    "TreeGrowingMap",
    "MarkedDepthMap",
    "PhiStepError",
    "CorruptMapError",
    "seed",
    "phi_step",
    "phi_steps",
    "phi",
    "close",
    "open_map",
    "psi_step",
    "psi",
    "validate_marked_depth_map",
]


class PhiStepError(MapError):
    """A letter ``c`` was read while the first and last legs were unusable."""


class CorruptMapError(RuntimeError):
    """Raised when an input violates a structural guarantee of the inverse."""


@dataclass(frozen=True)
class TreeGrowingMap:
    map: PlanarMap
    tree: SpanningTree

    def code(self) -> bytes:
        return canonical_code(self.map, self.tree)

    def non_head_legs(self) -> List[int]:
        return head_face_legs(self.map)


@dataclass(frozen=True)
class MarkedDepthMap:
    map: PlanarMap
    tree: SpanningTree
    marked: int
    target: int = 0

    @property
    def size(self) -> int:
        ns = near_cubic_size(self.map)
        if ns is None:
            raise MapError("map is not near-cubic")
        return ns[0]

    @property
    def root_edge(self) -> Optional[int]:
        a = self.map.alpha[self.map.root]
        return None if a is None else min(a, self.map.root)

    def code(self, *, tree: bool = True, mark: bool = True) -> bytes:
        return canonical_code(
            self.map, self.tree if tree else None, self.marked if mark else None
        )


def seed(i: int = 0) -> TreeGrowingMap:
    """One vertex holding the head, ``i`` left legs and the root leg.

    Half-edge 0 is the root and 1 the head; counterclockwise the vertex
    reads head, left legs, root.
    """
    if i < 0:
        raise ValueError("i must be non-negative")
    H = i + 2
    sigma = [0] * H
    ring = [1] + list(range(2, H)) + [0]
    for x, y in zip(ring, ring[1:] + ring[:1]):
        sigma[x] = y
    return TreeGrowingMap(build(sigma, [None] * H, 0, 1), frozenset())


def is_seed(tg: TreeGrowingMap) -> bool:
    m = tg.map
    return (
        m.vertex_count == 1
        and not m.edges
        and not tg.tree
        and m.head is not None
        and m.sigma[m.root] == m.head
    )


# ---------------------------------------------------------------------------
# Forward steps
# ---------------------------------------------------------------------------


def phi_step(tg: TreeGrowingMap, letter: str) -> TreeGrowingMap:
    """Apply one elementary mapping to a tree-growing map."""
    m = tg.map
    if m.head is None:
        raise MapError("not a growing map")
    head = m.head
    if letter in ("a", "b"):
        H = m.H
        e, nh, nl = H, H + 1, H + 2
        sigma = list(m.sigma) + [0, 0, 0]
        if letter == "a":
            sigma[e], sigma[nh], sigma[nl] = nh, nl, e
        else:
            sigma[e], sigma[nl], sigma[nh] = nl, nh, e
        alpha = list(m.alpha) + [head, None, None]
        alpha[head] = e
        nm = PlanarMap(tuple(sigma), tuple(alpha), m.root, nh)
        return TreeGrowingMap(nm, tg.tree | {min(head, e)})
    if letter != "c":
        raise ValueError(f"unknown letter {letter!r}")

    legs = head_face_legs(m)
    if not legs:
        raise PhiStepError("no leg besides the head")
    first, last = legs[0], legs[-1]
    u, v = m.vertex_of[first], m.vertex_of[last]
    if u == v:
        raise PhiStepError(
            f"first and last legs {first}, {last} share the endpoint {u}"
        )
    view = TreeView(m, tg.tree)
    if view.is_ancestor(u, v):
        s, t = first, last
    elif view.is_ancestor(v, u):
        s, t = last, first
    else:
        raise PhiStepError(
            f"endpoints {u} and {v} of legs {first}, {last} are not comparable"
        )
    alpha = list(m.alpha)
    alpha[head], alpha[s] = s, head
    return TreeGrowingMap(PlanarMap(m.sigma, tuple(alpha), m.root, t), tg.tree)


def phi_steps(w, i: int = 0) -> Iterator[Tuple[str, TreeGrowingMap]]:
    """Yield ``(suffix, state)`` for every suffix of ``w``, shortest first,
    using :func:`phi_step` only."""
    w = Walk(w)
    tg = seed(i)
    yield "", tg
    for k in range(len(w) - 1, -1, -1):
        tg = phi_step(tg, w[k])
        yield w[k:], tg


def close(tg: TreeGrowingMap) -> MarkedDepthMap:
    """Glue the head to the unique remaining leg; that edge is marked."""
    m = tg.map
    legs = [h for h in m.legs if h != m.head]
    if len(legs) != 1:
        raise MapError(f"closing needs exactly one leg besides the head, found {len(legs)}")
    (leg,) = legs
    alpha = list(m.alpha)
    alpha[m.head], alpha[leg] = leg, m.head
    nm = build(m.sigma, alpha, m.root)
    return MarkedDepthMap(nm, tg.tree, min(m.head, leg), nm.degree(nm.root_vertex) - 2)


def _check_family(w: Walk, i: int) -> None:
    cls = classify(w)
    if i == 0:
        if not cls.is_excursion:
            raise ValueError(f"{str(w)!r} is not an excursion")
    elif cls.kreweras_target != i:
        raise ValueError(f"{str(w)!r} is not a Kreweras walk ending at ({i},0)")


def phi(w, i: int = 0, *, check: bool = True) -> MarkedDepthMap:
    """Image of an excursion (``i = 0``) or of a Kreweras walk ending at
    ``(i, 0)``.

    Runs in time linear in ``len(w)``: the legs of the head-face are kept
    in tour order in a deque, and ancestry between the first and last legs
    is decided by tree depth since every leg ends on the tree path to the
    head-vertex.  ``check=False`` trusts the caller that ``w`` belongs to
    the family and skips validation of the result.
    """
    w = Walk(w)
    if i < 0:
        raise ValueError("i must be non-negative")
    if check:
        _check_family(w, i)

    H0 = i + 2
    H = H0 + 3 * (w.na + w.nb)
    sigma = [0] * H
    alpha: List[Optional[int]] = [None] * H
    hdepth = [0] * H  # depth of the vertex carrying each half-edge
    ring = [1] + list(range(2, H0)) + [0]
    for x, y in zip(ring, ring[1:] + ring[:1]):
        sigma[x] = y
    tree = []
    legs = deque(ring[1:])
    head = 1
    e = H0

    for letter in reversed(w):
        if letter == "c":
            first, last = legs[0], legs[-1]
            du, dv = hdepth[first], hdepth[last]
            # every leg ends on the tree path to the head-vertex, so equal
            # depths mean equal endpoints
            if du == dv:
                raise PhiStepError(f"legs {first}, {last} have unusable endpoints")
            if du < dv:
                s, t = legs.popleft(), legs.pop()
            else:
                s, t = legs.pop(), legs.popleft()
            alpha[head], alpha[s] = s, head
            head = t
        else:
            nh, nl = e + 1, e + 2
            if letter == "a":
                sigma[e], sigma[nh], sigma[nl] = nh, nl, e
                legs.appendleft(nl)
            else:
                sigma[e], sigma[nl], sigma[nh] = nl, nh, e
                legs.append(nl)
            alpha[head], alpha[e] = e, head
            d = hdepth[head] + 1
            hdepth[e] = hdepth[nh] = hdepth[nl] = d
            tree.append(head)
            head = nh
            e += 3

    if len(legs) != 1:
        raise MapError(f"{len(legs)} legs remain besides the head")
    leg = legs[0]
    alpha[head], alpha[leg] = leg, head
    if check:
        m = build(sigma, alpha, 0)
    else:
        m = PlanarMap(tuple(sigma), tuple(alpha), 0)
        # vertices were created as consecutive half-edge triples
        new = range(1, (H - H0) // 3 + 1)
        m.__dict__["vertex_of"] = (0,) * H0 + tuple(chain.from_iterable(zip(new, new, new)))
    return MarkedDepthMap(m, frozenset(tree), min(head, leg), i)


# ---------------------------------------------------------------------------
# Inverse
# ---------------------------------------------------------------------------


def open_map(mdm: MarkedDepthMap) -> TreeGrowingMap:
    """Split the marked edge into two legs; the leg at the descendant
    endpoint becomes the head."""
    m = mdm.map
    e = mdm.marked
    a = m.alpha[e]
    if a is None:
        raise MapError("marked half-edge is a leg")
    if min(e, a) in mdm.tree:
        raise MapError("the marked edge is internal")
    x, y = m.vertex_of[e], m.vertex_of[a]
    if x == y:
        if m.edge_count != 1:
            raise MapError("marked edge is a loop")
        head = a if e == m.root else e
    else:
        view = TreeView(m, mdm.tree)
        if view.is_ancestor(x, y):
            head = a
        elif view.is_ancestor(y, x):
            head = e
        else:
            raise MapError("marked edge joins incomparable vertices")
    alpha = list(m.alpha)
    alpha[e] = alpha[a] = None
    return TreeGrowingMap(build(m.sigma, alpha, m.root, head), mdm.tree)


def _readable(tg: TreeGrowingMap) -> Optional[str]:
    m = tg.map
    hv = m.head_vertex
    if hv is None or hv == m.root_vertex or m.degree(hv) != 3:
        return None
    x = m.sigma[m.head]
    y = m.sigma[x]
    xl, yl = m.alpha[x] is None, m.alpha[y] is None
    if xl and not yl:
        return "a"
    if yl and not xl:
        return "b"
    if xl or yl:
        return None
    br = bridges(m)
    if m.edge_of(x) in br or m.edge_of(y) in br:
        return None
    try:
        view = TreeView(m, tg.tree)
    except MapError:
        return None
    return "c" if view.is_depth_tree() else None


def _find_e0(tg: TreeGrowingMap) -> Tuple[int, int]:
    """The unique external edge on the head-face joining a proper ancestor
    of the head-vertex to a descendant of it.  Returns ``(s, h)`` with ``h``
    the half-edge at the descendant end."""
    m = tg.map
    view = TreeView(m, tg.tree)
    hv = m.head_vertex
    found = {}
    for x in m.face_tour(m.head):
        a = m.alpha[x]
        if a is None:
            continue
        e = min(x, a)
        if e in tg.tree or e in found:
            continue
        p, q = m.vertex_of[x], m.vertex_of[a]
        for (h_up, up), (h_down, down) in (((x, p), (a, q)), ((a, q), (x, p))):
            if up != hv and view.is_ancestor(up, hv) and view.is_ancestor(hv, down):
                found[e] = (h_up, h_down)
    if len(found) != 1:
        raise CorruptMapError(
            f"expected exactly one candidate edge on the head-face, found {sorted(found)}"
        )
    return next(iter(found.values()))


def psi_step(tg: TreeGrowingMap) -> Optional[Tuple[str, TreeGrowingMap]]:
    """Read one letter off ``tg``; ``None`` when no letter is readable."""
    letter = _readable(tg)
    if letter is None:
        return None
    m = tg.map
    head = m.head
    if letter == "c":
        s, h = _find_e0(tg)
        alpha = list(m.alpha)
        alpha[s] = alpha[h] = None
        return letter, TreeGrowingMap(PlanarMap(m.sigma, tuple(alpha), m.root, h), tg.tree)

    x = m.sigma[head]
    y = m.sigma[x]
    e, leg = (y, x) if letter == "a" else (x, y)
    back = m.alpha[e]
    nm, new_id = _compact(m, {head, e, leg}, {back: None}, m.root, back)
    tree = frozenset(
        min(new_id[f], new_id[m.alpha[f]]) for f in tg.tree if f != min(e, back)
    )
    return letter, TreeGrowingMap(nm, tree)


def psi(mdm: MarkedDepthMap) -> Walk:
    """Longest word readable on the opened map."""
    tg = open_map(mdm)
    letters = []
    budget = mdm.map.edge_count
    while True:
        step = psi_step(tg)
        if step is None:
            break
        letter, tg = step
        letters.append(letter)
        if len(letters) > budget:
            raise CorruptMapError("more letters read than edges in the map")
    if not is_seed(tg):
        raise CorruptMapError("reading stopped before reaching a seed map")
    return Walk("".join(letters))


def validate_marked_depth_map(mdm: MarkedDepthMap) -> None:
    """Raise :class:`MapError` unless ``mdm`` is a closed, non-separable
    ``(target+2)``-near-cubic map with a depth tree and an external mark."""
    m = mdm.map
    if not m.is_closed:
        raise MapError("map has legs")
    ns = near_cubic_size(m)
    if ns is None or ns[1] != mdm.target + 2:
        raise MapError(f"map is not {mdm.target + 2}-near-cubic")
    if not is_non_separable(m) or bridges(m):
        raise MapError("map is separable")
    view = TreeView(m, mdm.tree)
    if not view.is_depth_tree():
        raise MapError("tree is not a depth tree")
    a = m.alpha[mdm.marked]
    if a is None or mdm.marked > a:
        raise MapError("marked is not an edge id")
    if mdm.marked in mdm.tree:
        raise MapError("marked edge is internal")
    if m.vertex_of[mdm.marked] == m.vertex_of[a] and m.edge_count != 1:
        raise MapError("marked edge is a loop")
