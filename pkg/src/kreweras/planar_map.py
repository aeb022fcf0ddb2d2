"""Rooted planar maps stored as rotation systems.

Half-edges are the integers ``0..H-1``.  ``sigma[h]`` is the next half-edge
counterclockwise around the vertex of ``h``; ``alpha[h]`` is the opposite
half of the edge containing ``h``, or ``None`` when ``h`` is a *leg*.  An edge
is named by the smaller of its two half-edge ids.

Face tours use ``succ(h) = sigma[alpha[h]]`` for paired half-edges and
``succ(h) = sigma[h]`` for legs.  Touring the head-face of a growing map
starting at the head lists its legs in the order used throughout the
package ("first" and "last" legs, left and right of the root).
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

__all__ = [
    "MapError",
    "PlanarMap",
    "MapStats",
    "SpanningTree",
    "TreeView",
    "build",
    "loop_map",
    "relabel",
    "head_face_legs",
    "left_right_legs",
    "bridges",
    "is_bridge",
    "is_non_separable",
    "is_depth_tree",
    "near_cubic_size",
    "stats",
    "cubic_to_near_cubic",
    "near_cubic_to_cubic",
    "dual",
    "canonical_form",
    "canonical_code",
    "from_code",
]

SpanningTree = FrozenSet[int]


class MapError(ValueError):
    """Raised when map data violates a structural requirement."""


@dataclass(frozen=True)
class PlanarMap:
    """Immutable rotation system.  Use :func:`build` to get a validated one."""

    sigma: Tuple[int, ...]
    alpha: Tuple[Optional[int], ...]
    root: int
    head: Optional[int] = None

    @property
    def H(self) -> int:
        return len(self.sigma)

    def is_leg(self, h: int) -> bool:
        return self.alpha[h] is None

    @cached_property
    def legs(self) -> Tuple[int, ...]:
        return tuple(h for h, a in enumerate(self.alpha) if a is None)

    @property
    def is_closed(self) -> bool:
        return not self.legs

    @cached_property
    def vertex_of(self) -> Tuple[int, ...]:
        """Vertex index of each half-edge; vertices are numbered in order of
        their smallest half-edge."""
        out = [-1] * self.H
        nv = 0
        for h in range(self.H):
            if out[h] < 0:
                x = h
                while out[x] < 0:
                    out[x] = nv
                    x = self.sigma[x]
                nv += 1
        return tuple(out)

    @cached_property
    def vertices(self) -> Tuple[Tuple[int, ...], ...]:
        """Sigma cycles, each starting at its smallest half-edge."""
        cycles: List[List[int]] = []
        for h, v in enumerate(self.vertex_of):
            if v == len(cycles):
                cyc = [h]
                x = self.sigma[h]
                while x != h:
                    cyc.append(x)
                    x = self.sigma[x]
                cycles.append(cyc)
        return tuple(tuple(c) for c in cycles)

    @cached_property
    def degrees(self) -> Tuple[int, ...]:
        """Degree of each vertex, legs included."""
        vo = self.vertex_of
        out = [0] * (max(vo) + 1 if vo else 0)
        for v in vo:
            out[v] += 1
        return tuple(out)

    @property
    def vertex_count(self) -> int:
        return len(self.degrees)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    @property
    def root_vertex(self) -> int:
        return self.vertex_of[self.root]

    @property
    def head_vertex(self) -> Optional[int]:
        return None if self.head is None else self.vertex_of[self.head]

    @cached_property
    def edges(self) -> Tuple[int, ...]:
        return tuple(h for h, a in enumerate(self.alpha) if a is not None and h < a)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def edge_of(self, h: int) -> int:
        a = self.alpha[h]
        if a is None:
            raise MapError(f"half-edge {h} is a leg")
        return min(h, a)

    def ends(self, e: int) -> Tuple[int, int]:
        a = self.alpha[e]
        if a is None or a < e:
            raise MapError(f"{e} is not an edge id")
        return self.vertex_of[e], self.vertex_of[a]

    def succ(self, h: int) -> int:
        a = self.alpha[h]
        return self.sigma[h if a is None else a]

    @cached_property
    def faces(self) -> Tuple[Tuple[int, ...], ...]:
        seen = [False] * self.H
        out = []
        for h in range(self.H):
            if not seen[h]:
                cyc = []
                x = h
                while not seen[x]:
                    seen[x] = True
                    cyc.append(x)
                    x = self.succ(x)
                out.append(tuple(cyc))
        return tuple(out)

    @cached_property
    def face_of(self) -> Tuple[int, ...]:
        out = [0] * self.H
        for i, f in enumerate(self.faces):
            for h in f:
                out[h] = i
        return tuple(out)

    def face_tour(self, start: int) -> List[int]:
        tour = [start]
        x = self.succ(start)
        while x != start:
            tour.append(x)
            x = self.succ(x)
        return tour

    def graph_edges(self) -> List[Tuple[int, int, int]]:
        """``(u, v, edge_id)`` for every complete edge."""
        vo = self.vertex_of
        return [(vo[e], vo[self.alpha[e]], e) for e in self.edges]

    def __repr__(self) -> str:
        return (
            f"PlanarMap(H={self.H}, V={self.vertex_count}, E={self.edge_count}, "
            f"legs={len(self.legs)}, root={self.root}, head={self.head})"
        )


def build(
    sigma: Sequence[int],
    alpha: Sequence[Optional[int]],
    root: int,
    head: Optional[int] = None,
    *,
    check: bool = True,
) -> PlanarMap:
    """Validate rotation-system arrays and return a :class:`PlanarMap`.

    Legs are only accepted on growing maps (``head`` given), and then they
    must all lie on the head-face.  Closed maps must have genus zero.
    """
    sigma = tuple(int(x) for x in sigma)
    alpha = tuple(None if x is None or x < 0 else int(x) for x in alpha)
    m = PlanarMap(sigma, alpha, int(root), None if head is None else int(head))
    if check:
        _validate(m)
    return m


def _validate(m: PlanarMap) -> None:
    H = m.H
    if H == 0:
        raise MapError("a map needs at least one half-edge")
    if len(m.alpha) != H:
        raise MapError("sigma and alpha have different lengths")
    if sorted(m.sigma) != list(range(H)):
        raise MapError("sigma is not a permutation")
    for h, a in enumerate(m.alpha):
        if a is None:
            continue
        if not 0 <= a < H or a == h or m.alpha[a] != h:
            raise MapError(f"alpha is not a fixed-point-free involution at {h}")
    if not 0 <= m.root < H:
        raise MapError("root out of range")
    if m.head is not None:
        if not 0 <= m.head < H:
            raise MapError("head out of range")
        if m.alpha[m.head] is not None:
            raise MapError("the head must be a leg")
        if m.head == m.root:
            raise MapError("head and root must be distinct")
    # connectivity from the root through sigma and alpha
    seen = [False] * H
    seen[m.root] = True
    stack = [m.root]
    while stack:
        h = stack.pop()
        for x in (m.sigma[h], m.alpha[h]):
            if x is not None and not seen[x]:
                seen[x] = True
                stack.append(x)
    if not all(seen):
        raise MapError("map is disconnected")
    if m.head is None:
        if m.legs:
            raise MapError(f"legs {list(m.legs)} present but no head declared")
        V, E, F = m.vertex_count, m.edge_count, len(m.faces)
        if V - E + F != 2:
            raise MapError(f"Euler characteristic V-E+F = {V - E + F}, expected 2")
    else:
        face = set(m.face_tour(m.head))
        stray = [h for h in m.legs if h not in face]
        if stray:
            raise MapError(f"legs {stray} are not on the head-face")


def loop_map() -> PlanarMap:
    """One vertex carrying a single loop."""
    return build([1, 0], [1, 0], 0)


def relabel(m: PlanarMap, perm: Sequence[int]) -> PlanarMap:
    """The same map with half-edge ``h`` renamed ``perm[h]``."""
    H = m.H
    sigma = [0] * H
    alpha: List[Optional[int]] = [None] * H
    for h in range(H):
        sigma[perm[h]] = perm[m.sigma[h]]
        a = m.alpha[h]
        alpha[perm[h]] = None if a is None else perm[a]
    head = None if m.head is None else perm[m.head]
    return PlanarMap(tuple(sigma), tuple(alpha), perm[m.root], head)


def relabel_tree(m: PlanarMap, tree: Iterable[int], perm: Sequence[int]) -> SpanningTree:
    return frozenset(min(perm[e], perm[m.alpha[e]]) for e in tree)


# ---------------------------------------------------------------------------
# Legs of the head-face
# ---------------------------------------------------------------------------


def head_face_legs(m: PlanarMap) -> List[int]:
    """Legs met while touring the head-face from the head (head excluded)."""
    if m.head is None:
        raise MapError("map has no head")
    return [h for h in m.face_tour(m.head)[1:] if m.alpha[h] is None]


def left_right_legs(m: PlanarMap) -> Tuple[List[int], List[int]]:
    """Split the head-face legs into those before and after the root leg."""
    legs = head_face_legs(m)
    if m.root not in legs:
        raise MapError("the root is not a leg of the head-face")
    k = legs.index(m.root)
    return legs[:k], legs[k + 1 :]


# ---------------------------------------------------------------------------
# Bridges and separability
# ---------------------------------------------------------------------------


def _lowpoints(nv: int, edges: Sequence[Tuple[int, int, int]], start: int = 0):
    """Iterative lowpoint DFS on a multigraph.

    Returns ``(bridges, cut_vertices, reached)``; parallel edges are told
    apart by edge id so they never count as bridges.
    """
    adj: List[List[Tuple[int, int]]] = [[] for _ in range(nv)]
    for u, v, e in edges:
        adj[u].append((v, e))
        if u != v:
            adj[v].append((u, e))
    disc = [-1] * nv
    low = [0] * nv
    bridge_set: Set[int] = set()
    cuts: Set[int] = set()
    if nv == 0:
        return bridge_set, cuts, 0
    disc[start] = low[start] = 0
    t = 1
    root_children = 0
    # stack entries: vertex, edge used to enter it, next adjacency index
    stack = [[start, -1, 0]]
    while stack:
        top = stack[-1]
        v, pe, i = top
        if i < len(adj[v]):
            top[2] += 1
            w, e = adj[v][i]
            if e == pe:
                continue
            if disc[w] < 0:
                disc[w] = low[w] = t
                t += 1
                if v == start:
                    root_children += 1
                stack.append([w, e, 0])
            else:
                low[v] = min(low[v], disc[w])
        else:
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if low[v] > disc[p]:
                    bridge_set.add(pe)
                if p != start and low[v] >= disc[p]:
                    cuts.add(p)
    if root_children > 1:
        cuts.add(start)
    reached = sum(1 for d in disc if d >= 0)
    return bridge_set, cuts, reached


def bridges(m: PlanarMap) -> Set[int]:
    """Edge ids whose deletion disconnects the underlying graph."""
    found, _, _ = _lowpoints(m.vertex_count, m.graph_edges(), m.root_vertex)
    return found


def is_bridge(m: PlanarMap, e: int) -> bool:
    if e not in set(m.edges):
        raise MapError(f"unknown edge {e}")
    return e in bridges(m)


def is_non_separable(m: PlanarMap) -> bool:
    """No partition of the edges into two non-empty parts sharing one vertex.

    Legs are ignored.
    """
    E = m.edge_count
    if E <= 1:
        return True
    if any(u == v for u, v, _ in m.graph_edges()):
        return False
    _, cuts, _ = _lowpoints(m.vertex_count, m.graph_edges(), m.root_vertex)
    return not cuts


# ---------------------------------------------------------------------------
# Spanning trees
# ---------------------------------------------------------------------------


class TreeView:
    """Ancestry queries for a spanning tree rooted at the root-vertex."""

    def __init__(self, m: PlanarMap, tree: Iterable[int]):
        self.map = m
        self.tree = frozenset(tree)
        nv = m.vertex_count
        edge_ids = set(m.edges)
        unknown = self.tree - edge_ids
        if unknown:
            raise MapError(f"tree contains unknown edges {sorted(unknown)}")
        if len(self.tree) != nv - 1:
            raise MapError(f"tree has {len(self.tree)} edges, a spanning tree needs {nv - 1}")
        adj: List[List[Tuple[int, int]]] = [[] for _ in range(nv)]
        for e in self.tree:
            u, v = m.ends(e)
            adj[u].append((v, e))
            adj[v].append((u, e))
        r = m.root_vertex
        self.parent = [-1] * nv
        self.parent_edge = [-1] * nv
        self.depth = [-1] * nv
        self.tin = [0] * nv
        self.tout = [0] * nv
        self.depth[r] = 0
        clock = 0
        stack = [(r, 0)]
        while stack:
            v, i = stack.pop()
            if i == 0:
                self.tin[v] = clock
                clock += 1
            if i < len(adj[v]):
                stack.append((v, i + 1))
                w, e = adj[v][i]
                if self.depth[w] < 0:
                    self.depth[w] = self.depth[v] + 1
                    self.parent[w] = v
                    self.parent_edge[w] = e
                    stack.append((w, 0))
            else:
                self.tout[v] = clock
                clock += 1
        if min(self.depth) < 0:
            raise MapError("tree edges do not span the map")

    def is_ancestor(self, u: int, v: int) -> bool:
        """True when ``u`` lies on the tree path from the root-vertex to ``v``."""
        return self.tin[u] <= self.tin[v] and self.tout[v] <= self.tout[u]

    def comparable(self, u: int, v: int) -> bool:
        return self.is_ancestor(u, v) or self.is_ancestor(v, u)

    def tree_path(self, u: int, v: int) -> List[int]:
        up: List[int] = []
        down: List[int] = []
        while not self.is_ancestor(u, v):
            up.append(u)
            u = self.parent[u]
        while v != u:
            down.append(v)
            v = self.parent[v]
        return up + [u] + down[::-1]

    def is_depth_tree(self) -> bool:
        m = self.map
        a = m.alpha[m.root]
        if a is not None and min(m.root, a) in self.tree:
            return False
        for e in m.edges:
            if e not in self.tree:
                u, v = m.ends(e)
                if not self.comparable(u, v):
                    return False
        return True


def is_depth_tree(m: PlanarMap, tree: Iterable[int]) -> bool:
    return TreeView(m, tree).is_depth_tree()


# ---------------------------------------------------------------------------
# Statistics and near-cubic size
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MapStats:
    vertex_count: int
    edge_count: int
    face_count: int
    leg_count: int
    degrees: Dict[int, int] = field(compare=False)
    near_cubic_size: Optional[Tuple[int, int]]


def near_cubic_size(m: PlanarMap) -> Optional[Tuple[int, int]]:
    """``(n, k)`` when every non-root vertex has degree 3, the root-vertex has
    degree ``k``, ``E = 3n + 2k - 3`` and ``V = 2n + k - 1``."""
    r = m.root_vertex
    if any(d != 3 for v, d in enumerate(m.degrees) if v != r):
        return None
    k = m.degree(r)
    rest = m.edge_count - 2 * k + 3
    if rest < 0 or rest % 3:
        return None
    n = rest // 3
    if m.vertex_count != 2 * n + k - 1:
        return None
    return n, k


def stats(m: PlanarMap) -> MapStats:
    return MapStats(
        vertex_count=m.vertex_count,
        edge_count=m.edge_count,
        face_count=len(m.faces),
        leg_count=len(m.legs),
        degrees=dict(Counter(m.degrees)),
        near_cubic_size=near_cubic_size(m) if m.is_closed else None,
    )


# ---------------------------------------------------------------------------
# Cubic <-> 2-near-cubic, duality
# ---------------------------------------------------------------------------


class _Renumbering:
    """Old-to-new half-edge ids after dropping a few half-edges."""

    def __init__(self, drop: Set[int], size: int):
        self.drop = sorted(drop)
        table: List[Optional[int]] = []
        lo = 0
        for k, d in enumerate(self.drop):
            table.extend(range(lo - k, d - k))
            table.append(None)
            lo = d + 1
        table.extend(range(lo - len(self.drop), size - len(self.drop)))
        self.table = table

    def __getitem__(self, h: int) -> int:
        new = self.table[h]
        if new is None:
            raise KeyError(h)
        return new


def _compact(m: PlanarMap, drop: Set[int], pairs: Dict[int, Optional[int]], root: int, head=None):
    """Remove the (few) half-edges in ``drop``, override alpha with
    ``pairs`` and renumber the survivors consecutively.  Returns the map and
    the renumbering."""
    new_id = _Renumbering(drop, len(m.sigma))
    dl = new_id.drop
    sigma = list(m.sigma)
    alpha = list(m.alpha)
    for h, a in pairs.items():
        alpha[h] = a
    # reroute the sigma-predecessor of each dropped half-edge; vertex
    # cycles are short so this stays local
    for d in dl:
        x = d
        while m.sigma[x] != d:
            x = m.sigma[x]
        if x in drop:
            continue
        y = m.sigma[d]
        while y in drop:
            y = m.sigma[y]
        sigma[x] = y
    for h in reversed(dl):
        del sigma[h], alpha[h]
    table = new_id.table
    sigma = [table[x] for x in sigma]
    alpha = [None if x is None else table[x] for x in alpha]
    nm = PlanarMap(
        tuple(sigma), tuple(alpha), new_id[root], None if head is None else new_id[head]
    )
    return nm, new_id


def near_cubic_to_cubic(
    m: PlanarMap, tree: Optional[Iterable[int]] = None
) -> Tuple[PlanarMap, Optional[SpanningTree]]:
    """Erase the degree-2 root-vertex of a 2-near-cubic map.

    The two edges at the root-vertex merge into the new root-edge; the new
    root is the half-edge at the far end of the edge following the old root.
    A depth tree loses its edge at the old root-vertex.
    """
    if not m.is_closed:
        raise MapError("expected a closed map")
    z = m.root_vertex
    if m.degree(z) != 2 or any(d != 3 for v, d in enumerate(m.degrees) if v != z):
        raise MapError("map is not 2-near-cubic")
    rho = m.root
    zp = m.sigma[rho]
    if m.alpha[rho] == zp:
        raise MapError("the loop map has no cubic counterpart")
    a, b = m.alpha[rho], m.alpha[zp]
    nm, new_id = _compact(m, {rho, zp}, {a: b, b: a}, b)
    new_tree = None
    if tree is not None:
        tree = set(tree)
        inner = min(zp, b)
        if inner not in tree or min(rho, a) in tree:
            raise MapError("tree must use the second edge at the root-vertex and avoid the root-edge")
        tree.discard(inner)
        new_tree = frozenset(min(new_id[e], new_id[m.alpha[e]]) for e in tree)
    return nm, new_tree


def cubic_to_near_cubic(
    m: PlanarMap, tree: Optional[Iterable[int]] = None
) -> Tuple[PlanarMap, Optional[SpanningTree]]:
    """Subdivide the root-edge of a cubic map by a new degree-2 root-vertex."""
    if not m.is_closed:
        raise MapError("expected a closed map")
    if any(d != 3 for d in m.degrees):
        raise MapError("map is not cubic")
    H = m.H
    r = m.root
    y = m.alpha[r]
    rho, zp = H, H + 1
    sigma = list(m.sigma) + [zp, rho]
    alpha = list(m.alpha) + [y, r]
    alpha[r] = zp
    alpha[y] = rho
    nm = PlanarMap(tuple(sigma), tuple(alpha), rho)
    new_tree = None
    if tree is not None:
        tree = set(tree)
        if min(r, y) in tree:
            raise MapError("the root-edge of a depth tree must be external")
        new_tree = frozenset(tree | {min(r, zp)})
    return nm, new_tree


def dual(m: PlanarMap) -> PlanarMap:
    """Faces become vertices and each edge is crossed by a dual edge.

    The dual rotation is the inverse face permutation, rooted at
    ``sigma[root]``; applying :func:`dual` twice gives a map isomorphic to
    the input as a rooted map.
    """
    if not m.is_closed:
        raise MapError("dual needs a closed map")
    H = m.H
    sinv = [0] * H
    for h, s in enumerate(m.sigma):
        sinv[s] = h
    alpha = m.alpha
    sigma = tuple([alpha[x] for x in sinv])
    return PlanarMap(sigma, alpha, m.sigma[m.root])


def is_loopless_triangulation(m: PlanarMap) -> bool:
    if any(u == v for u, v, _ in m.graph_edges()):
        return False
    return all(len(f) == 3 for f in m.faces)


# ---------------------------------------------------------------------------
# Canonical codes
# ---------------------------------------------------------------------------


def _canonical_order(m: PlanarMap) -> List[int]:
    label = [-1] * m.H
    order = [m.root]
    label[m.root] = 0
    i = 0
    while i < len(order):
        h = order[i]
        i += 1
        for x in (m.sigma[h], m.alpha[h]):
            if x is not None and label[x] < 0:
                label[x] = len(order)
                order.append(x)
    return label


def canonical_form(
    m: PlanarMap, tree: Optional[Iterable[int]] = None, marked: Optional[int] = None
) -> Tuple[PlanarMap, Optional[SpanningTree], Optional[int]]:
    """Relabel half-edges by first visit of a breadth-first walk from the
    root that follows ``sigma`` then ``alpha``.

    Isomorphic rooted maps (with decorations) have identical forms.
    """
    perm = _canonical_order(m)
    if min(perm) < 0:
        raise MapError("map is disconnected")
    cm = relabel(m, perm)
    ct = None if tree is None else relabel_tree(m, tree, perm)
    cmk = None if marked is None else min(perm[marked], perm[m.alpha[marked]])
    return cm, ct, cmk


def canonical_code(
    m: PlanarMap, tree: Optional[Iterable[int]] = None, marked: Optional[int] = None
) -> bytes:
    cm, ct, cmk = canonical_form(m, tree, marked)
    parts = [
        "s" + ",".join(map(str, cm.sigma)),
        "a" + ",".join("-" if a is None else str(a) for a in cm.alpha),
        "h" + ("-" if cm.head is None else str(cm.head)),
    ]
    if ct is not None:
        parts.append("t" + ",".join(map(str, sorted(ct))))
    if cmk is not None:
        parts.append("m" + str(cmk))
    return ";".join(parts).encode("ascii")


def from_code(code: bytes) -> Tuple[PlanarMap, Optional[SpanningTree], Optional[int]]:
    """Rebuild ``(map, tree, marked)`` from :func:`canonical_code` output."""
    fields = {}
    for part in code.decode("ascii").split(";"):
        fields[part[0]] = part[1:]
    sigma = [int(x) for x in fields["s"].split(",")]
    alpha = [None if x == "-" else int(x) for x in fields["a"].split(",")]
    head = None if fields["h"] == "-" else int(fields["h"])
    tree = None
    if "t" in fields:
        tree = frozenset(int(x) for x in fields["t"].split(",") if x)
    marked = int(fields["m"]) if "m" in fields else None
    return build(sigma, alpha, 0, head), tree, marked
