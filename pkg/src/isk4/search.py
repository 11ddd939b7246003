"""Budgeted exhaustive search primitives over bitmask graphs.

Every search here is a deterministic depth-first search that visits candidate
vertices in increasing index order.  Expansions are charged to a
:class:`Budget`; exhausting it raises :class:`SearchBudgetExceeded`, which
callers must surface as an inconclusive answer rather than as absence.
"""

from __future__ import annotations

from typing import Iterator

from .graph import Graph, members

__all__ = [
    "DEFAULT_BUDGET",
    "Budget",
    "SearchBudgetExceeded",
    "induced_cycles",
    "induced_cycles_by_length",
    "induced_paths",
    "fans",
    "blocks",
    "articulation_points",
    "two_core",
]

DEFAULT_BUDGET = 10**7


class SearchBudgetExceeded(RuntimeError):
    """A budgeted search ran out of expansions before finishing."""

    def __init__(self, limit: int) -> None:
        self.limit = limit
        super().__init__(f"search budget of {limit} expansions exhausted")


class Budget:
    """Shared expansion counter; ``None`` as limit means unbounded."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: int | None = DEFAULT_BUDGET) -> None:
        self.limit = limit
        self.used = 0

    def charge(self, amount: int = 1) -> None:
        self.used += amount
        if self.limit is not None and self.used > self.limit:
            raise SearchBudgetExceeded(self.limit)


def _as_budget(budget: Budget | int | None) -> Budget:
    if isinstance(budget, Budget):
        return budget
    return Budget(budget)


def _rooted_cycles(
    g: Graph, s: int, allowed: int, min_len: int, max_len: int, budget: Budget
) -> Iterator[tuple[int, ...]]:
    """Induced cycles whose least vertex is ``s``, in lexicographic order.

    Cycles are reported as ``(s, v1, ..., vk)`` with ``v1 < vk`` so that each
    cycle appears once.
    """
    masks = g.masks
    higher = allowed & ~((2 << s) - 1)
    sbit = 1 << s
    path = [s]

    def extend(pmask: int, blocked: int) -> Iterator[tuple[int, ...]]:
        # blocked: closed neighborhoods of path vertices strictly between s and the tail
        tail = path[-1]
        length = len(path)
        for w in members(masks[tail] & higher & ~pmask & ~blocked):
            budget.charge()
            if masks[w] & sbit and length >= 2:
                if length + 1 >= min_len and path[1] < w:
                    yield tuple(path) + (w,)
                continue
            if length + 1 >= max_len:
                continue
            path.append(w)
            newly = masks[tail] | (1 << tail) if length >= 2 else 0
            yield from extend(pmask | (1 << w), blocked | newly)
            path.pop()

    yield from extend(sbit, 0)


def induced_cycles(
    g: Graph,
    min_len: int = 3,
    allowed: int | None = None,
    budget: Budget | int | None = None,
    max_len: int | None = None,
) -> Iterator[tuple[int, ...]]:
    """All induced cycles of ``g|allowed``, grouped by least vertex.

    Within each least vertex the order is lexicographic.  Each cycle is given
    in canonical rotation: least vertex first, second vertex smaller than the
    last.
    """
    budget = _as_budget(budget)
    allowed = g.all_mask if allowed is None else allowed
    max_len = g.order if max_len is None else max_len
    for s in members(allowed):
        yield from _rooted_cycles(g, s, allowed, min_len, max_len, budget)


def induced_cycles_by_length(
    g: Graph,
    min_len: int = 3,
    allowed: int | None = None,
    budget: Budget | int | None = None,
) -> Iterator[tuple[int, ...]]:
    """Induced cycles in (length, lexicographic) order, generated lazily."""
    budget = _as_budget(budget)
    allowed = g.all_mask if allowed is None else allowed
    n = bin(allowed).count("1")
    for length in range(max(min_len, 3), n + 1):
        found = []
        for s in members(allowed):
            for c in _rooted_cycles(g, s, allowed, length, length, budget):
                if len(c) == length:
                    found.append(c)
        yield from sorted(found)


def induced_paths(
    g: Graph,
    max_vertices: int,
    allowed: int | None = None,
    budget: Budget | int | None = None,
) -> Iterator[tuple[int, ...]]:
    """Induced paths with at most ``max_vertices`` vertices inside ``allowed``.

    Each path is reported once, oriented so that its first vertex is smaller
    than its last (single vertices included).
    """
    budget = _as_budget(budget)
    allowed = g.all_mask if allowed is None else allowed
    masks = g.masks
    for s in members(allowed):
        yield (s,)
        path = [s]

        def extend(pmask: int, blocked: int) -> Iterator[tuple[int, ...]]:
            tail = path[-1]
            for w in members(masks[tail] & allowed & ~pmask & ~blocked):
                budget.charge()
                path.append(w)
                if s < w:
                    yield tuple(path)
                if len(path) < max_vertices:
                    yield from extend(pmask | (1 << w), blocked | masks[tail] | (1 << tail))
                path.pop()

        if max_vertices >= 2:
            yield from extend(1 << s, 0)


def fans(
    g: Graph,
    apex: int,
    base: int,
    k: int = 3,
    allowed: int | None = None,
    budget: Budget | int | None = None,
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Induced fans from ``apex`` onto the vertex set ``base``.

    A fan is a family of ``k`` paths, each running from ``apex`` to a distinct
    vertex of ``base``, such that the union of ``base``, the apex and the path
    vertices induces exactly: the edges inside ``base``, plus the path edges.
    In particular path interiors avoid and are anticomplete to ``base`` except
    for the final edge, different paths only meet at the apex and have no
    edges between them, and every neighbor of the apex in ``base`` is the end
    of a one-edge path.

    Paths are reported apex-first.  One-edge paths to base neighbors of the
    apex come first, then the remaining paths by increasing second vertex.
    """
    budget = _as_budget(budget)
    allowed = g.all_mask if allowed is None else allowed
    masks = g.masks
    abit = 1 << apex
    if base & abit:
        raise ValueError("apex must not lie in base")
    direct = members(masks[apex] & base)
    if len(direct) > k:
        return
    forced = [(apex, c) for c in direct]
    ends0 = 0
    for c in direct:
        ends0 |= 1 << c
    pool = allowed & ~base & ~abit
    starts = members(masks[apex] & pool)
    paths: list[tuple[int, ...]] = list(forced)

    def grow(
        path: list[int], used: int, ends: int, min_start: int
    ) -> Iterator[tuple[tuple[int, ...], ...]]:
        # used: apex plus every non-base path vertex chosen so far
        tail = path[-1]
        tbit = 1 << tail
        if tail == apex:
            cands = [w for w in starts if w > min_start]
        else:
            cands = members(masks[tail] & pool & ~used)
        for w in cands:
            budget.charge()
            if used >> w & 1 or masks[w] & used != tbit:
                continue
            hit = masks[w] & base
            if hit & (hit - 1):
                continue
            if hit:
                if hit & ends:
                    continue
                done = tuple(path) + (w, hit.bit_length() - 1)
                paths.append(done)
                if len(paths) == k:
                    yield tuple(paths)
                else:
                    yield from grow([apex], used | (1 << w), ends | hit, path[1] if len(path) > 1 else w)
                paths.pop()
            else:
                path.append(w)
                yield from grow(path, used | (1 << w), ends, min_start)
                path.pop()

    if len(forced) == k:
        yield tuple(paths)
        return
    yield from grow([apex], abit, ends0, -1)


def articulation_points_and_blocks(g: Graph, within: int | None = None) -> tuple[list[int], list[int]]:
    """Cut vertices and blocks (as masks) of ``g|within``; iterative Tarjan."""
    allowed = g.all_mask if within is None else within
    masks = g.masks
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    cuts = set()
    blocks_out: list[int] = []
    timer = 0
    for root in members(allowed):
        if root in disc:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(members(masks[root] & allowed)))]
        if not masks[root] & allowed:
            blocks_out.append(1 << root)
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if u == parent:
                    continue
                if u not in disc:
                    disc[u] = low[u] = timer
                    timer += 1
                    edge_stack.append((v, u))
                    stack.append((u, v, iter(members(masks[u] & allowed))))
                    if v == root:
                        root_children += 1
                    advanced = True
                    break
                if disc[u] < disc[v]:
                    low[v] = min(low[v], disc[u])
                    edge_stack.append((v, u))
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if low[v] >= disc[p]:
                    if p != root:
                        cuts.add(p)
                    bmask = 0
                    while edge_stack:
                        a, b = edge_stack.pop()
                        bmask |= (1 << a) | (1 << b)
                        if (a, b) == (p, v):
                            break
                    blocks_out.append(bmask)
        if root_children > 1:
            cuts.add(root)
    return sorted(cuts), blocks_out


def articulation_points(g: Graph, within: int | None = None) -> list[int]:
    return articulation_points_and_blocks(g, within)[0]


def blocks(g: Graph, within: int | None = None) -> list[int]:
    return articulation_points_and_blocks(g, within)[1]


def two_core(g: Graph, within: int | None = None) -> int:
    """Mask of the 2-core: repeatedly strip vertices of degree at most one."""
    core = g.all_mask if within is None else within
    masks = g.masks
    changed = True
    while changed:
        changed = False
        for v in members(core):
            d = masks[v] & core
            if not d or not d & (d - 1):
                core &= ~(1 << v)
                changed = True
    return core
