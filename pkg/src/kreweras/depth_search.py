"""Depth-first search trees and their enumeration on near-cubic graphs.

Works on a plain multigraph (:class:`Graph`); planar maps are converted
with :func:`as_graph`, keeping edge ids so trees can be compared with the
ones produced by the bijection.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Set, Tuple, Union

from .planar_map import MapError, PlanarMap, SpanningTree, bridges

__all__ = [
    "Graph",
    "as_graph",
    "ChoiceCase",
    "ChoiceRecord",
    "DfsState",
    "u_connected",
    "dfs_tree",
    "all_dfs_trees",
    "enumerate_dfs_trees_through",
    "enumerate_depth_trees",
]


@dataclass(frozen=True)
class Graph:
    """Undirected multigraph; ``ends`` maps edge ids to endpoint pairs."""

    vertex_count: int
    ends: Dict[int, Tuple[int, int]] = field(hash=False)

    def __post_init__(self):
        adj: List[List[Tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        for e in sorted(self.ends):
            u, v = self.ends[e]
            adj[u].append((e, v))
            if u != v:
                adj[v].append((e, u))
        object.__setattr__(self, "adj", adj)

    def degree(self, v: int) -> int:
        return sum(2 if w == v else 1 for _, w in self.adj[v])

    @property
    def edge_count(self) -> int:
        return len(self.ends)

    def other(self, e: int, v: int) -> int:
        a, b = self.ends[e]
        return b if a == v else a

    def connected(self, removed: Iterable[int] = ()) -> bool:
        removed = set(removed)
        alive = [v for v in range(self.vertex_count) if v not in removed]
        if not alive:
            return True
        seen = {alive[0]}
        stack = [alive[0]]
        while stack:
            v = stack.pop()
            for _, w in self.adj[v]:
                if w not in seen and w not in removed:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(alive)


def as_graph(m: Union[PlanarMap, Graph]) -> Graph:
    if isinstance(m, Graph):
        return m
    return Graph(m.vertex_count, {e: (u, v) for u, v, e in m.graph_edges()})


class ChoiceCase(str, Enum):
    ALPHA = "alpha"  # a single eligible edge
    BETA = "beta"  # two eligible edges whose targets are U-connected
    GAMMA = "gamma"  # two eligible edges whose targets are not U-connected


@dataclass(frozen=True)
class ChoiceRecord:
    vertex: int
    candidates: Tuple[int, ...]
    case: ChoiceCase
    chosen: int


@dataclass
class DfsState:
    current: int
    visited: Set[int]
    tree: Set[int]
    parent: Dict[int, int]
    trace: List[ChoiceRecord] = field(default_factory=list)


Chooser = Callable[[DfsState, Sequence[int]], int]


def u_connected(g, unvisited: Iterable[int], x: int, y: int) -> bool:
    """Is there an ``x``-``y`` path whose inner vertices are all in ``unvisited``?"""
    g = as_graph(g)
    if x == y:
        return True
    allowed = set(unvisited)
    allowed.add(y)
    seen = {x}
    stack = [x]
    while stack:
        v = stack.pop()
        for _, w in g.adj[v]:
            if w == y:
                return True
            if w in allowed and w not in seen:
                seen.add(w)
                stack.append(w)
    return False


def _candidates(g: Graph, state: DfsState) -> List[int]:
    v = state.current
    return [e for e, w in g.adj[v] if w not in state.visited]


def _classify(g: Graph, state: DfsState, cands: Sequence[int]) -> ChoiceCase:
    if len(cands) <= 1:
        return ChoiceCase.ALPHA
    v = state.current
    unvisited = set(range(g.vertex_count)) - state.visited
    targets = [g.other(e, v) for e in cands]
    for i in range(len(targets)):
        for j in range(i + 1, len(targets)):
            if u_connected(g, unvisited, targets[i], targets[j]):
                return ChoiceCase.BETA
    return ChoiceCase.GAMMA


def _advance(g: Graph, state: DfsState, e: int, cands, record: bool) -> None:
    if record:
        case = _classify(g, state, cands)
        state.trace.append(ChoiceRecord(state.current, tuple(cands), case, e))
    w = g.other(e, state.current)
    state.tree.add(e)
    state.visited.add(w)
    state.parent[w] = state.current
    state.current = w


def _lowest(_state: DfsState, cands: Sequence[int]) -> int:
    return min(cands)


def dfs_tree(
    m,
    v0: Optional[int] = None,
    chooser: Optional[Chooser] = None,
    *,
    first_edge: Optional[int] = None,
    trace: Optional[List[ChoiceRecord]] = None,
    visits: Optional[List[int]] = None,
) -> SpanningTree:
    """Spanning tree built by depth-first search from ``v0``.

    ``chooser(state, candidates)`` picks the next edge among those leading
    to unvisited vertices (smallest edge id by default).  When ``trace`` is
    a list, every forward step is appended to it with its choice case;
    ``visits`` receives the current vertex at each iteration.
    """
    g = as_graph(m)
    if v0 is None:
        v0 = m.root_vertex if isinstance(m, PlanarMap) else 0
    if not g.connected():
        raise MapError("graph is disconnected")
    chooser = chooser or _lowest
    state = DfsState(v0, {v0}, set(), {})
    record = trace is not None
    if first_edge is not None:
        cands = _candidates(g, state)
        if first_edge not in cands:
            raise MapError(f"edge {first_edge} does not leave {v0} towards an unvisited vertex")
        _advance(g, state, first_edge, cands, False)
    while True:
        if visits is not None:
            visits.append(state.current)
        cands = _candidates(g, state)
        if cands:
            e = chooser(state, cands)
            if e not in cands:
                raise ValueError(f"chooser returned {e}, not one of {cands}")
            _advance(g, state, e, cands, record)
        elif state.current != v0:
            state.current = state.parent[state.current]
        else:
            break
    if trace is not None:
        trace.extend(state.trace)
    return frozenset(state.tree)


def _explore(g: Graph, state: DfsState, v0: int, out: Set[SpanningTree], traces) -> None:
    """Run the search to completion, branching at every choice point."""
    while True:
        cands = _candidates(g, state)
        if len(cands) > 1:
            for e in cands:
                branch = DfsState(
                    state.current,
                    set(state.visited),
                    set(state.tree),
                    dict(state.parent),
                    list(state.trace),
                )
                _advance(g, branch, e, cands, traces is not None)
                _explore(g, branch, v0, out, traces)
            return
        if cands:
            _advance(g, state, cands[0], cands, traces is not None)
        elif state.current != v0:
            state.current = state.parent[state.current]
        else:
            out.add(frozenset(state.tree))
            if traces is not None:
                traces.append(state.trace)
            return


def all_dfs_trees(m, v0: Optional[int] = None) -> Set[SpanningTree]:
    """Every tree some run of the search from ``v0`` can return."""
    g = as_graph(m)
    if v0 is None:
        v0 = m.root_vertex if isinstance(m, PlanarMap) else 0
    if not g.connected():
        raise MapError("graph is disconnected")
    out: Set[SpanningTree] = set()
    _explore(g, DfsState(v0, {v0}, set(), {}), v0, out, None)
    return out


def near_cubic_graph_size(g: Graph, v0: int) -> int:
    k = g.degree(v0)
    if any(g.degree(v) != 3 for v in range(g.vertex_count) if v != v0):
        raise MapError("graph is not near-cubic at the given vertex")
    rest = g.edge_count - 2 * k + 3
    if rest < 0 or rest % 3:
        raise MapError("edge count does not fit a near-cubic size")
    return rest // 3


def enumerate_dfs_trees_through(
    m,
    v0: int,
    e0: int,
    *,
    traces: Optional[List[List[ChoiceRecord]]] = None,
) -> Set[SpanningTree]:
    """All search trees whose first step takes ``e0``, by full backtracking.

    Requires a loopless connected near-cubic graph that stays connected
    without ``v0``, and ``e0`` incident to ``v0``.  When ``traces`` is a
    list, it receives the choice trace of every complete run.
    """
    g = as_graph(m)
    if any(u == v for u, v in g.ends.values()):
        raise MapError("graph has loops")
    if not g.connected():
        raise MapError("graph is disconnected")
    if g.vertex_count > 1 and not g.connected(removed=[v0]):
        raise MapError("deleting v0 disconnects the graph")
    near_cubic_graph_size(g, v0)
    if e0 not in g.ends or v0 not in g.ends[e0]:
        raise MapError(f"edge {e0} is not incident to {v0}")
    state = DfsState(v0, {v0}, set(), {})
    _advance(g, state, e0, [e0], False)
    out: Set[SpanningTree] = set()
    _explore(g, state, v0, out, traces)
    return out


def enumerate_depth_trees(m: PlanarMap) -> Set[SpanningTree]:
    """Depth trees of a bridgeless 2-near-cubic map."""
    if not m.is_closed:
        raise MapError("expected a closed map")
    r = m.root_vertex
    if m.degree(r) != 2:
        raise MapError("root-vertex must have degree 2")
    if m.alpha[m.root] == m.sigma[m.root]:
        return {frozenset()}
    if bridges(m):
        raise MapError("map has a bridge")
    return enumerate_dfs_trees_through(m, r, m.edge_of(m.sigma[m.root]))
