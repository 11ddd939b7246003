"""Isomorphism-free enumeration of all graphs on at most seven vertices.

The canonical form of a graph is the least integer obtained by reading the
upper adjacency triangle (graph6 bit order) under every vertex permutation.
Representatives of order ``n`` are produced by attaching a new vertex, with
every possible neighborhood, to each representative of order ``n - 1`` and
keeping one graph per canonical form.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from ..graph import Graph, build_graph

__all__ = ["MAX_ENUM_ORDER", "canonical_form", "enumerate_all_graphs", "graph_from_code"]

MAX_ENUM_ORDER = 7


@lru_cache(maxsize=None)
def _tables(n: int):
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.intp).reshape(-1, n)
    rows, cols = [], []
    for j in range(1, n):
        for i in range(j):
            rows.append(i)
            cols.append(j)
    nbits = len(rows)
    weights = (1 << np.arange(nbits - 1, -1, -1, dtype=np.int64)) if nbits else np.zeros(0, np.int64)
    # entry (p, k) is the pair of original vertices read at bit k under permutation p
    pr = perms[:, rows] if nbits else np.zeros((len(perms), 0), np.intp)
    pc = perms[:, cols] if nbits else np.zeros((len(perms), 0), np.intp)
    return pr, pc, weights


def _matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.order, g.order), dtype=np.int64)
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1
    return a


def canonical_form(g: Graph) -> tuple[int, int]:
    """``(order, code)``, equal for two graphs exactly when they are isomorphic."""
    n = g.order
    if n > MAX_ENUM_ORDER + 1:
        raise ValueError("brute-force canonical form is limited to small graphs")
    if n < 2:
        return n, 0
    pr, pc, weights = _tables(n)
    bits = _matrix(g)[pr, pc]
    return n, int((bits @ weights).min())


def graph_from_code(n: int, code: int) -> Graph:
    """Inverse of the code part of :func:`canonical_form`."""
    edges = []
    nbits = n * (n - 1) // 2
    k = 0
    for j in range(1, n):
        for i in range(j):
            if code >> (nbits - 1 - k) & 1:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


@lru_cache(maxsize=None)
def _codes(n: int) -> tuple[int, ...]:
    if n <= 1:
        return (0,)
    seen = set()
    for code in _codes(n - 1):
        base = graph_from_code(n - 1, code)
        base_edges = base.edges()
        for nbrs in range(1 << (n - 1)):
            extra = [(v, n - 1) for v in range(n - 1) if nbrs >> v & 1]
            seen.add(canonical_form(build_graph(n, base_edges + extra))[1])
    return tuple(sorted(seen))


def enumerate_all_graphs(max_order: int):
    """One canonical representative per isomorphism class, orders 0..max_order.

    Graphs come by increasing order, then by increasing canonical code, and
    are given in their canonical labeling.
    """
    if max_order > MAX_ENUM_ORDER:
        raise ValueError(f"internal enumeration stops at order {MAX_ENUM_ORDER}; use a graph6 file")
    if max_order < 0:
        raise ValueError("max_order must be non-negative")
    for n in range(max_order + 1):
        for code in _codes(n):
            yield graph_from_code(n, code)
