"""Seeded graph generators.

All randomness comes from numpy's PCG64 bit generator.  A generator call
with ``(seed, index)`` always builds the same graph, independently of how
many other graphs were generated before it, so corpora can be split across
workers without changing their content.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from ..graph import Graph, GraphError, build_graph
from ..recognizers import DEFAULT_EXACT_BOUND, class_membership, is_series_parallel

__all__ = [
    "rng_for",
    "gen_gnp",
    "gen_series_parallel",
    "gen_wheel",
    "gen_k33_glued",
    "gen_inclass_extension",
    "gen_non_offensive",
    "cycle_graph",
    "complete_graph",
    "complete_bipartite",
    "petersen_graph",
]


def rng_for(seed: int, index: int = 0) -> np.random.Generator:
    """PCG64 stream determined by ``(seed, index)``."""
    return np.random.Generator(np.random.PCG64([seed, index]))


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def gen_gnp(n: int, p: float, seed: int, index: int = 0) -> Graph:
    rng = rng_for(seed, index)
    draws = rng.random(n * (n - 1) // 2)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if draws[k] < p:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


def gen_series_parallel(n: int, seed: int, index: int = 0) -> Graph:
    """Random series-parallel graph on ``n`` vertices.

    Starting from one edge, each new vertex is added by one of three moves:
    hang it as a pendant, subdivide an edge with it, or join it to both ends
    of an edge (a parallel path of length two).  Every move preserves
    K4-minor-freeness; the result is re-checked anyway.
    """
    if n < 1:
        raise GraphError("need at least one vertex")
    rng = rng_for(seed, index)
    if n == 1:
        return build_graph(1, [])
    edges: list[tuple[int, int]] = [(0, 1)]
    for v in range(2, n):
        move = int(rng.integers(3))
        if move == 0:
            edges.append((int(rng.integers(v)), v))
            continue
        k = int(rng.integers(len(edges)))
        a, b = edges[k]
        if move == 1:
            edges[k] = (a, v)
            edges.append((v, b))
        else:
            edges.append((a, v))
            edges.append((v, b))
    g = build_graph(n, edges)
    if not is_series_parallel(g):
        raise AssertionError("series-parallel generator produced a K4 minor")
    return g


def gen_wheel(spokes: int, interiors: Sequence[int], exact_bound: int = DEFAULT_EXACT_BOUND) -> Graph:
    """Rim of ``sum(interiors) + spokes`` vertices plus a center (the last vertex).

    Rim vertices are numbered along the rim, starting at a spoke; sector ``i``
    has ``interiors[i]`` interior vertices.  The result is checked to be free
    of triangles and ISK4s.
    """
    if spokes < 4:
        raise GraphError("wheels in the class need at least four spokes")
    if len(interiors) != spokes or min(interiors) < 1:
        raise GraphError("need one interior length >= 1 per sector")
    rim_len = spokes + sum(interiors)
    center = rim_len
    edges = [(i, (i + 1) % rim_len) for i in range(rim_len)]
    pos = 0
    for length in interiors:
        edges.append((pos, center))
        pos += length + 1
    g = build_graph(rim_len + 1, edges)
    report = class_membership(g, exact_bound)
    if not report.in_class:
        raise AssertionError(f"wheel construction left the class: {report.verdict}")
    return g


def gen_k33_glued(base: Graph) -> Graph:
    """Glue a private K3,3 onto every vertex of ``base``.

    Base vertices keep their indices; copy ``i`` adds five vertices after
    them and identifies base vertex ``i`` with one vertex of the copy.
    """
    n = base.order
    edges = list(base.edges())
    nxt = n
    for v in range(n):
        side_a = [v, nxt, nxt + 1]
        side_b = [nxt + 2, nxt + 3, nxt + 4]
        nxt += 5
        edges += [(a, b) for a in side_a for b in side_b]
    return build_graph(nxt, edges)


def gen_inclass_extension(
    base: Graph,
    extra: int,
    seed: int,
    index: int = 0,
    max_attach: int = 3,
    tries: int = 40,
    exact_bound: int = DEFAULT_EXACT_BOUND,
) -> Graph:
    """Grow ``base`` by up to ``extra`` vertices while staying in the class.

    Each new vertex gets 1..``max_attach`` random neighbors; candidates that
    create a triangle or an ISK4 are discarded.  ``base`` must be in the class.
    """
    rng = rng_for(seed, index)
    g = base
    for _ in range(extra):
        for _ in range(tries):
            n = g.order
            k = int(rng.integers(1, min(max_attach, n) + 1))
            nbrs = sorted(int(u) for u in rng.choice(n, size=k, replace=False))
            trial = build_graph(n + 1, g.edges() + [(u, n) for u in nbrs])
            if class_membership(trial, exact_bound).in_class:
                g = trial
                break
    return g


def gen_non_offensive(spokes: int, interior: int, marked: Sequence[int], exact_bound: int = DEFAULT_EXACT_BOUND) -> Graph:
    """Wheel with one extra vertex per marked spoke that spoils properness.

    All sectors get ``interior`` interior vertices (odd, at least 5).  The
    extra vertex for spoke ``i`` is adjacent to the center and to the interior
    vertices at odd distance from spoke ``i`` in the two sectors meeting there.
    Such a vertex sees two sectors, so the wheel is not proper, but it is
    non-offensive at spoke ``i``.
    """
    if interior < 5 or interior % 2 == 0:
        raise GraphError("interior length must be odd and at least 5")
    marked = sorted(set(marked))
    if any(not 0 <= i < spokes for i in marked):
        raise GraphError("marked spoke index out of range")
    for a, b in zip(marked, marked[1:] + marked[:1]):
        if len(marked) > 1 and (b - a) % spokes in (1, spokes - 1):
            raise GraphError("marked spokes must not be consecutive")
    base = gen_wheel(spokes, [interior] * spokes, exact_bound)
    rim_len = base.order - 1
    center = rim_len
    step = interior + 1
    edges = base.edges()
    nxt = base.order
    for i in marked:
        spoke = i * step
        attach = [center]
        for d in range(1, interior + 1, 2):
            attach.append((spoke + d) % rim_len)
            attach.append((spoke - d) % rim_len)
        edges += [(nxt, u) for u in attach]
        nxt += 1
    g = build_graph(nxt, edges)
    report = class_membership(g, exact_bound)
    if not report.in_class:
        raise AssertionError(f"non-offensive construction left the class: {report.verdict}")
    return g
