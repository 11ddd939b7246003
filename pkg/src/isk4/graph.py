"""Immutable simple undirected graphs with traceable vertex labels.

Vertices are dense indices ``0..order-1``.  Every derived graph (induced
subgraph, contraction) carries a ``labels`` tuple mapping each of its vertices
back to an opaque tag, by default the index it had in the parent graph.
"""

from __future__ import annotations

from collections import deque
from typing import Hashable, Iterable, Sequence

__all__ = [
    "Graph",
    "GraphError",
    "build_graph",
    "induced_subgraph",
    "components",
    "contract_component",
    "mask_of",
    "members",
]


class GraphError(ValueError):
    """Invalid graph construction or an operation's precondition breach."""


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    """Sorted list of the set bits of ``mask``."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class Graph:
    """A finite simple undirected graph.

    Instances are immutable; all operations return new graphs.  Equality and
    hashing consider order and adjacency only, not labels.
    """

    __slots__ = ("_adj", "_masks", "_labels", "_edges")

    def __init__(
        self,
        adjacency: Sequence[Sequence[int]],
        labels: Sequence[Hashable] | None = None,
    ) -> None:
        adj = tuple(tuple(sorted(set(nbrs))) for nbrs in adjacency)
        n = len(adj)
        for v, nbrs in enumerate(adj):
            for u in nbrs:
                if u == v:
                    raise GraphError(f"self-loop at vertex {v}")
                if not 0 <= u < n:
                    raise GraphError(f"neighbor {u} of {v} out of range")
                if v not in adj[u]:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise GraphError("labels length differs from order")
            if len(set(labels)) != n:
                raise GraphError("labels must be unique")
        self._adj = adj
        self._masks = tuple(mask_of(nbrs) for nbrs in adj)
        self._labels = labels
        self._edges = None

    # basic queries -------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self._adj)

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighborhoods as integer bitmasks."""
        return self._masks

    @property
    def labels(self) -> tuple[Hashable, ...]:
        if self._labels is None:
            return tuple(range(self.order))
        return self._labels

    @property
    def has_labels(self) -> bool:
        return self._labels is not None

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self._adj]

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self._masks[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        if self._edges is None:
            self._edges = tuple((u, v) for u in range(self.order) for v in self._adj[u] if u < v)
        return list(self._edges)

    @property
    def size(self) -> int:
        return sum(len(nbrs) for nbrs in self._adj) // 2

    @property
    def all_mask(self) -> int:
        return (1 << self.order) - 1

    def closed_mask(self, v: int) -> int:
        return self._masks[v] | (1 << v)

    def index_of(self, label: Hashable) -> int:
        return self.labels.index(label)

    def relabeled(self, labels: Sequence[Hashable] | None) -> "Graph":
        return Graph(self._adj, labels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, size={self.size})"


def build_graph(order: int, edges: Iterable[tuple[int, int]], labels=None) -> Graph:
    """Build a graph from an edge list, silently dropping duplicate edges."""
    if order < 0:
        raise GraphError("order must be non-negative")
    nbrs: list[set[int]] = [set() for _ in range(order)]
    for u, v in edges:
        if u == v:
            raise GraphError(f"self-loop ({u}, {v})")
        if not (0 <= u < order and 0 <= v < order):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{order - 1}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(nbrs, labels)


def _check_vertices(g: Graph, vertices: Iterable[int]) -> list[int]:
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.order:
            raise GraphError(f"vertex {v} out of range for order {g.order}")
    return vs


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    """``G|X``: vertices renumbered in increasing order, labels inherited."""
    vs = _check_vertices(g, keep)
    index = {v: i for i, v in enumerate(vs)}
    adj = [[index[u] for u in g.neighbors(v) if u in index] for v in vs]
    parent = g.labels
    return Graph(adj, [parent[v] for v in vs])


def components(g: Graph, within: int | None = None) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest member.

    ``within`` optionally restricts to the subgraph induced by a vertex mask.
    """
    remaining = g.all_mask if within is None else within
    masks = g.masks
    out = []
    while remaining:
        start = remaining & -remaining
        comp = start
        frontier = start
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = masks[low.bit_length() - 1] & remaining & ~comp
            comp |= new
            frontier |= new
        remaining &= ~comp
        out.append(members(comp))
    return out


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    return [mask_of(c) for c in components(g, within)]


def is_connected_mask(g: Graph, mask: int) -> bool:
    if not mask:
        return True
    start = mask & -mask
    comp = frontier = start
    masks = g.masks
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        new = masks[low.bit_length() - 1] & mask & ~comp
        comp |= new
        frontier |= new
    return comp == mask


def contract_component(g: Graph, part: Iterable[int], tag: Hashable) -> Graph:
    """Replace the connected vertex set ``part`` by one new vertex tagged ``tag``.

    The new vertex comes last; the remaining vertices keep their relative
    order and labels.
    """
    vs = _check_vertices(g, part)
    if not vs:
        raise GraphError("cannot contract an empty set")
    pmask = mask_of(vs)
    if not is_connected_mask(g, pmask):
        raise GraphError("contracted set must be connected")
    rest = [v for v in range(g.order) if not pmask >> v & 1]
    index = {v: i for i, v in enumerate(rest)}
    z = len(rest)
    adj: list[list[int]] = [[index[u] for u in g.neighbors(v) if u in index] for v in rest]
    znbrs = []
    for v in rest:
        if g.masks[v] & pmask:
            adj[index[v]].append(z)
            znbrs.append(index[v])
    adj.append(znbrs)
    parent = g.labels
    labels = [parent[v] for v in rest] + [tag]
    return Graph(adj, labels)


def bfs_path(g: Graph, source: int, targets: int, allowed: int) -> list[int] | None:
    """Shortest path from ``source`` to any vertex of mask ``targets``.

    Interior vertices are restricted to mask ``allowed``.  Shortest paths are
    induced in the subgraph they traverse.
    """
    if targets >> source & 1:
        return [source]
    parent = {source: None}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in g.neighbors(v):
            if u in parent:
                continue
            if targets >> u & 1:
                path = [u, v]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                return path[::-1]
            if allowed >> u & 1:
                parent[u] = v
                queue.append(u)
    return None
