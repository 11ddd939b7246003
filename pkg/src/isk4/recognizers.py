"""Detectors for triangles, ISK4s, K3,3 subgraphs, K4 minors and linkages.

Every negative membership answer comes with a witness object that can be
re-validated against the graph without rerunning the search.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, GraphError, is_connected_mask, mask_of, members
from .search import Budget, SearchBudgetExceeded, blocks, fans, induced_cycles, two_core

__all__ = [
    "DEFAULT_EXACT_BOUND",
    "TriangleWitness",
    "Isk4Witness",
    "K33Witness",
    "LinkageWitness",
    "K4Minor",
    "SeriesParallelReport",
    "ClassReport",
    "find_triangle",
    "find_k33_subgraph",
    "find_isk4",
    "find_isk4_exact",
    "find_isk4_search",
    "check_isk4_witness",
    "is_series_parallel",
    "check_reduction",
    "check_k4_minor",
    "complete_bipartite_parts",
    "is_linked",
    "find_linkage",
    "validate_hole",
    "class_membership",
]

DEFAULT_EXACT_BOUND = 14


@dataclass(frozen=True)
class TriangleWitness:
    vertices: tuple[int, int, int]

    def validate(self, g: Graph) -> bool:
        a, b, c = self.vertices
        return len({a, b, c}) == 3 and g.adjacent(a, b) and g.adjacent(b, c) and g.adjacent(a, c)

    def to_dict(self) -> dict:
        return {"kind": "triangle", "vertices": list(self.vertices)}

    def relabel(self, mapping: Sequence[int]) -> "TriangleWitness":
        return TriangleWitness(tuple(sorted(mapping[v] for v in self.vertices)))


@dataclass(frozen=True)
class Isk4Witness:
    """An induced subdivision of K4: its vertex set, branch vertices and six paths.

    ``paths[i]`` runs between two branch vertices, from the smaller to the
    larger; the six paths are listed in lexicographic order of their ends.
    """

    vertices: tuple[int, ...]
    branch: tuple[int, int, int, int]
    paths: tuple[tuple[int, ...], ...]

    def validate(self, g: Graph) -> bool:
        return check_isk4_witness(g, self)

    def to_dict(self) -> dict:
        return {
            "kind": "isk4",
            "vertices": list(self.vertices),
            "branch": list(self.branch),
            "paths": [list(p) for p in self.paths],
        }

    def relabel(self, mapping: Sequence[int]) -> "Isk4Witness":
        return _isk4_from_paths([tuple(mapping[v] for v in p) for p in self.paths])


@dataclass(frozen=True)
class K33Witness:
    """Two disjoint triples with all nine cross pairs adjacent."""

    a: tuple[int, int, int]
    b: tuple[int, int, int]

    def validate(self, g: Graph) -> bool:
        if len(set(self.a) | set(self.b)) != 6:
            return False
        return all(g.adjacent(u, v) for u in self.a for v in self.b)

    def to_dict(self) -> dict:
        return {"kind": "k33", "a": list(self.a), "b": list(self.b)}


@dataclass(frozen=True)
class LinkageWitness:
    """Three paths linking ``vertex`` to ``hole``; each path starts at ``vertex``."""

    vertex: int
    hole: tuple[int, ...]
    paths: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]

    def to_dict(self) -> dict:
        return {
            "kind": "linkage",
            "vertex": self.vertex,
            "hole": list(self.hole),
            "paths": [list(p) for p in self.paths],
        }


@dataclass(frozen=True)
class K4Minor:
    """Four disjoint connected branch sets and one edge joining each pair."""

    branch_sets: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]

    def to_dict(self) -> dict:
        return {
            "kind": "k4_minor",
            "branch_sets": [list(s) for s in self.branch_sets],
            "edges": [list(e) for e in self.edges],
        }


@dataclass(frozen=True)
class SeriesParallelReport:
    """``reduction`` certifies a yes answer; ``minor`` certifies a no."""

    series_parallel: bool
    reduction: tuple[tuple, ...] = ()
    minor: K4Minor | None = None

    def __bool__(self) -> bool:
        return self.series_parallel

    def to_dict(self) -> dict:
        out: dict = {"series_parallel": self.series_parallel}
        if self.series_parallel:
            out["reduction"] = [list(step) for step in self.reduction]
        else:
            out["minor"] = self.minor.to_dict()
        return out


IN_CLASS = "in_class"
OUT_OF_CLASS = "out_of_class"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ClassReport:
    verdict: str
    witness: TriangleWitness | Isk4Witness | None = None
    exact: bool = True

    @property
    def in_class(self) -> bool:
        return self.verdict == IN_CLASS

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "exact": self.exact,
            "witness": None if self.witness is None else self.witness.to_dict(),
        }


# triangles and K3,3 ---------------------------------------------------------


def find_triangle(g: Graph) -> TriangleWitness | None:
    """The lexicographically least triangle, if any."""
    masks = g.masks
    for u in range(g.order):
        higher_u = masks[u] >> (u + 1) << (u + 1)
        for v in members(higher_u):
            common = masks[u] & masks[v] >> (v + 1) << (v + 1)
            if common:
                return TriangleWitness((u, v, (common & -common).bit_length() - 1))
    return None


def find_k33_subgraph(g: Graph) -> K33Witness | None:
    """Least ``(A, B)`` with ``A < B`` lexicographically and A complete to B."""
    masks = g.masks
    n = g.order
    for a in itertools.combinations(range(n), 3):
        common = masks[a[0]] & masks[a[1]] & masks[a[2]]
        common = common >> (a[0] + 1) << (a[0] + 1)
        cands = members(common)
        if len(cands) >= 3:
            return K33Witness(a, tuple(cands[:3]))
    return None


# ISK4 -----------------------------------------------------------------------


def _isk4_from_paths(paths: Sequence[Sequence[int]]) -> Isk4Witness:
    normalized = []
    for p in paths:
        p = tuple(p)
        if p[0] > p[-1]:
            p = p[::-1]
        normalized.append(p)
    normalized.sort(key=lambda p: (p[0], p[-1]))
    verts = sorted({v for p in normalized for v in p})
    branch = sorted({p[0] for p in normalized} | {p[-1] for p in normalized})
    return Isk4Witness(tuple(verts), tuple(branch), tuple(normalized))


def check_isk4_witness(g: Graph, w: Isk4Witness) -> bool:
    """Independent check of every invariant of an ISK4 witness."""
    verts = set(w.vertices)
    if len(verts) != len(w.vertices) or any(not 0 <= v < g.order for v in verts):
        return False
    smask = mask_of(verts)
    degs = {v: bin(g.masks[v] & smask).count("1") for v in verts}
    branch = {v for v, d in degs.items() if d == 3}
    if branch != set(w.branch) or len(branch) != 4:
        return False
    if any(d != 2 for v, d in degs.items() if v not in branch):
        return False
    if len(w.paths) != 6:
        return False
    pairs = set()
    seen_interior: set[int] = set()
    edge_count = 0
    for p in w.paths:
        if len(p) < 2 or p[0] not in branch or p[-1] not in branch or p[0] == p[-1]:
            return False
        pairs.add(frozenset((p[0], p[-1])))
        for a, b in zip(p, p[1:]):
            if not g.adjacent(a, b):
                return False
        edge_count += len(p) - 1
        interior = set(p[1:-1])
        if interior & branch or interior & seen_interior or len(interior) != len(p) - 2:
            return False
        seen_interior |= interior
    if len(pairs) != 6:
        return False
    if seen_interior | branch != verts:
        return False
    induced_edges = sum(degs.values()) // 2
    return edge_count == induced_edges


def _suppression_witness(g: Graph, smask: int) -> Isk4Witness | None:
    """Return a witness if ``G|smask`` is a subdivision of K4, else None."""
    masks = g.masks
    verts = members(smask)
    if len(verts) < 4:
        return None
    branch = []
    for v in verts:
        d = bin(masks[v] & smask).count("1")
        if d == 3:
            branch.append(v)
        elif d != 2:
            return None
    if len(branch) != 4 or not is_connected_mask(g, smask):
        return None
    bmask = mask_of(branch)
    paths = []
    for b in branch:
        ends = set()
        for first in members(masks[b] & smask):
            path = [b, first]
            prev, cur = b, first
            while not bmask >> cur & 1:
                nxt = members(masks[cur] & smask & ~(1 << prev))
                prev, cur = cur, nxt[0]
                path.append(cur)
            if cur == b:
                return None
            ends.add(cur)
            if b < cur:
                paths.append(path)
        if len(ends) != 3:
            return None
    return _isk4_from_paths(paths)


def find_isk4_exact(g: Graph) -> Isk4Witness | None:
    """Exact ISK4 detection by enumerating vertex subsets.

    Subsets are tried by increasing size, then lexicographically, so the
    witness has minimum order.  Cost is ``O(2^n)``; intended as an oracle.
    """
    n = g.order
    for k in range(4, n + 1):
        for combo in itertools.combinations(range(n), k):
            w = _suppression_witness(g, mask_of(combo))
            if w is not None:
                return w
    return None


def find_isk4_search(g: Graph, budget: Budget | int | None = None) -> Isk4Witness | None:
    """ISK4 detection by apex-plus-cycle search.

    Every ISK4 consists of a branch vertex (the apex), an induced cycle
    through the other three branch vertices, and an induced fan of three paths
    from the apex onto that cycle.  The search restricts to the blocks of the
    2-core, enumerates induced cycles there, and for each apex of degree at
    least three looks for a fan.  Exhaustive unless the expansion budget runs
    out, in which case :class:`SearchBudgetExceeded` is raised.
    """
    budget = budget if isinstance(budget, Budget) else Budget(budget)
    masks = g.masks
    core = two_core(g)
    for block in sorted(blocks(g, core), key=lambda m: (m & -m, m)):
        if bin(block).count("1") < 4:
            continue
        heavy = 0
        for v in members(block):
            if bin(masks[v] & block).count("1") >= 3:
                heavy |= 1 << v
        if bin(heavy).count("1") < 4:
            continue
        for cycle in induced_cycles(g, 3, block, budget):
            cmask = mask_of(cycle)
            if bin(cmask & heavy).count("1") < 3:
                continue
            for apex in members(heavy & ~cmask):
                for fan in fans(g, apex, cmask, 3, block, budget):
                    return _witness_from_fan(cycle, fan)
    return None


def _witness_from_fan(cycle: Sequence[int], fan) -> Isk4Witness:
    ends = {p[-1] for p in fan}
    pos = [i for i, v in enumerate(cycle) if v in ends]
    arcs = []
    L = len(cycle)
    for idx, start in enumerate(pos):
        stop = pos[(idx + 1) % 3]
        arc = [cycle[start]]
        i = start
        while i != stop:
            i = (i + 1) % L
            arc.append(cycle[i])
        arcs.append(arc)
    return _isk4_from_paths(list(fan) + arcs)


def find_isk4(
    g: Graph, exact_bound: int = DEFAULT_EXACT_BOUND, budget: Budget | int | None = None
) -> Isk4Witness | None:
    """Subset enumeration up to ``exact_bound`` vertices, budgeted search above."""
    if g.order <= exact_bound:
        return find_isk4_exact(g)
    return find_isk4_search(g, budget)


# series-parallel ------------------------------------------------------------


def is_series_parallel(g: Graph) -> SeriesParallelReport:
    """Decide K4-minor-freeness by degree-1 deletion and degree-2 suppression.

    A successful run records the reduction sequence; a stall (minimum degree
    at least three) is turned into an explicit K4 minor.
    """
    nbrs = [set(g.neighbors(v)) for v in range(g.order)]
    alive = set(range(g.order))
    branch = {v: {v} for v in alive}
    steps: list[tuple] = []
    while alive:
        v = next((u for u in sorted(alive) if len(nbrs[u]) <= 2), None)
        if v is None:
            break
        if len(nbrs[v]) <= 1:
            for u in nbrs[v]:
                nbrs[u].discard(v)
            steps.append(("delete", v))
        else:
            a, b = sorted(nbrs[v])
            nbrs[a].discard(v)
            nbrs[b].discard(v)
            nbrs[a].add(b)
            nbrs[b].add(a)
            branch[a] |= branch[v]
            steps.append(("suppress", v, a, b))
        nbrs[v] = set()
        alive.discard(v)
        del branch[v]
    if not alive:
        return SeriesParallelReport(True, tuple(steps))
    sets = _k4_minor_from_core(nbrs, alive, branch)
    edges = []
    for i, j in itertools.combinations(range(4), 2):
        edge = min(
            (min(u, v), max(u, v))
            for u in sets[i]
            for v in g.neighbors(u)
            if v in sets[j]
        )
        edges.append(edge)
    ordered = sorted(range(4), key=lambda i: min(sets[i]))
    remap = {old: new for new, old in enumerate(ordered)}
    bsets = tuple(tuple(sorted(sets[i])) for i in ordered)
    edge_list = []
    for (i, j), e in zip(itertools.combinations(range(4), 2), edges):
        edge_list.append((tuple(sorted((remap[i], remap[j]))), e))
    edge_list.sort()
    return SeriesParallelReport(False, (), K4Minor(bsets, tuple(e for _, e in edge_list)))


def _reduce_core(nb: dict[int, set[int]], bs: dict[int, set[int]]) -> None:
    """Degree-1 deletion and degree-2 suppression in place, tracking branch sets."""
    queue = sorted(v for v, s in nb.items() if len(s) <= 2)
    while queue:
        v = queue.pop()
        if v not in nb or len(nb[v]) > 2:
            continue
        touched = list(nb[v])
        if len(touched) == 2:
            a, b = sorted(touched)
            nb[a].discard(v)
            nb[b].discard(v)
            nb[a].add(b)
            nb[b].add(a)
            bs[a] |= bs[v]
        else:
            for u in touched:
                nb[u].discard(v)
        del nb[v], bs[v]
        queue.extend(u for u in touched if len(nb[u]) <= 2)


def _k4_minor_from_core(nbrs, alive, branch) -> list[set[int]]:
    """Shrink a reduced (minimum degree 3) graph to K4.

    Deletes a vertex, or failing that an edge, whenever the re-reduced
    remainder is still non-empty.  Re-reduction only deletes vertices and
    contracts edges, so the branch sets stay connected.  A reduced graph with
    at least five vertices has more edges than any K4 model inside it can
    use, so some edge deletion always succeeds.
    """
    nb = {v: set(nbrs[v]) for v in alive}
    bs = {v: set(branch[v]) for v in alive}

    def attempt(drop_vertex=None, drop_edge=None):
        tn = {v: set(s) for v, s in nb.items()}
        tb = {v: set(s) for v, s in bs.items()}
        if drop_vertex is not None:
            for u in tn.pop(drop_vertex):
                tn[u].discard(drop_vertex)
            del tb[drop_vertex]
        else:
            u, v = drop_edge
            tn[u].discard(v)
            tn[v].discard(u)
        _reduce_core(tn, tb)
        return (tn, tb) if tn else None

    while len(nb) > 4:
        trial = None
        for v in sorted(nb):
            trial = attempt(drop_vertex=v)
            if trial:
                break
        if trial is None:
            for u in sorted(nb):
                for v in sorted(nb[u]):
                    if u < v:
                        trial = attempt(drop_edge=(u, v))
                        if trial:
                            break
                if trial:
                    break
        if trial is None:
            raise AssertionError("reduced core could not be shrunk towards K4")
        nb, bs = trial
    if len(nb) != 4 or any(len(s) != 3 for s in nb.values()):
        raise AssertionError("reduced core is not K4")
    return [bs[v] for v in sorted(nb)]


def check_reduction(g: Graph, steps: Sequence[Sequence]) -> bool:
    """Replay a reduction sequence and confirm it empties the graph."""
    nbrs = [set(g.neighbors(v)) for v in range(g.order)]
    alive = set(range(g.order))
    for step in steps:
        kind, v = step[0], step[1]
        if v not in alive:
            return False
        if kind == "delete":
            if len(nbrs[v]) > 1:
                return False
            for u in nbrs[v]:
                nbrs[u].discard(v)
        elif kind == "suppress":
            a, b = step[2], step[3]
            if nbrs[v] != {a, b} or a == b:
                return False
            nbrs[a].discard(v)
            nbrs[b].discard(v)
            nbrs[a].add(b)
            nbrs[b].add(a)
        else:
            return False
        nbrs[v] = set()
        alive.discard(v)
    return not alive


def check_k4_minor(g: Graph, minor: K4Minor) -> bool:
    sets = [set(s) for s in minor.branch_sets]
    if len(sets) != 4 or any(not s for s in sets):
        return False
    union = set().union(*sets)
    if sum(len(s) for s in sets) != len(union):
        return False
    if any(not 0 <= v < g.order for v in union):
        return False
    if not all(is_connected_mask(g, mask_of(s)) for s in sets):
        return False
    covered = set()
    for u, v in minor.edges:
        if not g.adjacent(u, v):
            return False
        iu = next((i for i, s in enumerate(sets) if u in s), None)
        iv = next((i for i, s in enumerate(sets) if v in s), None)
        if iu is None or iv is None or iu == iv:
            return False
        covered.add(frozenset((iu, iv)))
    return len(covered) == 6


# complete bipartite ---------------------------------------------------------


def complete_bipartite_parts(g: Graph) -> tuple[list[int], list[int]] | None:
    """Sides ``(A, B)`` if ``g`` is complete bipartite, with ``0 in A``.

    Edgeless graphs (including the empty and one-vertex graph) qualify with
    ``A = V`` and ``B`` empty.
    """
    n = g.order
    if g.size == 0:
        return list(range(n)), []
    side = [-1] * n
    side[0] = 0
    stack = [0]
    while stack:
        v = stack.pop()
        for u in g.neighbors(v):
            if side[u] == -1:
                side[u] = 1 - side[v]
                stack.append(u)
            elif side[u] == side[v]:
                return None
    if -1 in side:
        return None
    a = [v for v in range(n) if side[v] == 0]
    b = [v for v in range(n) if side[v] == 1]
    if any(g.degree(v) != len(b) for v in a) or any(g.degree(v) != len(a) for v in b):
        return None
    return a, b


# linkage --------------------------------------------------------------------


def validate_hole(g: Graph, hole: Sequence[int]) -> None:
    """Raise ``GraphError`` unless ``hole`` is an induced cycle of length >= 4."""
    L = len(hole)
    if L < 4 or len(set(hole)) != L:
        raise GraphError("a hole needs at least four distinct vertices")
    if any(not 0 <= v < g.order for v in hole):
        raise GraphError("hole vertex out of range")
    hmask = mask_of(hole)
    for i, v in enumerate(hole):
        want = (1 << hole[i - 1]) | (1 << hole[(i + 1) % L])
        if g.masks[v] & hmask != want:
            raise GraphError(f"sequence is not an induced cycle at vertex {v}")


def is_linked(g: Graph, w: LinkageWitness) -> bool:
    """Check the five conditions for ``w.vertex`` being linked to ``w.hole``."""
    try:
        validate_hole(g, w.hole)
    except GraphError:
        return False
    v = w.vertex
    C = set(w.hole)
    cmask = mask_of(C)
    paths = w.paths
    if len(paths) != 3 or v in C:
        return False
    for p in paths:
        if len(p) < 2 or len(set(p)) != len(p):
            return False
        if any(not g.adjacent(a, b) for a, b in zip(p, p[1:])):
            return False
        # induced path
        pm = mask_of(p)
        for i, a in enumerate(p):
            want = 0
            if i > 0:
                want |= 1 << p[i - 1]
            if i + 1 < len(p):
                want |= 1 << p[i + 1]
            if g.masks[a] & pm != want:
                return False
    interiors = set().union(*(set(p[1:-1]) for p in paths))
    # interiors and v avoid C
    if (interiors | {v}) & C:
        return False
    for p in paths:
        # one end v, the other in C, no other edges from the path to C
        if p[0] != v or p[-1] not in C:
            return False
        for i, a in enumerate(p[1:-1], start=1):
            allowed = (1 << p[-1]) if i == len(p) - 2 else 0
            if g.masks[a] & cmask & ~allowed:
                return False
    # pairwise intersections are exactly {v}
    for p, q in itertools.combinations(paths, 2):
        if set(p) & set(q) != {v}:
            return False
    # cross edges only at v or inside C
    for p, q in itertools.combinations(paths, 2):
        for a in p:
            for b in q:
                if g.adjacent(a, b) and v not in (a, b) and not {a, b} <= C:
                    return False
    # every C-neighbor of v lies on a path
    on_paths = set().union(*(set(p) for p in paths))
    return all(c in on_paths for c in g.neighbors(v) if c in C)


def find_linkage(
    g: Graph, v: int, hole: Sequence[int], budget: Budget | int | None = None
) -> LinkageWitness | None:
    validate_hole(g, hole)
    if v in hole:
        raise GraphError("linked vertex must not lie on the hole")
    for fan in fans(g, v, mask_of(hole), 3, None, budget):
        return LinkageWitness(v, tuple(hole), tuple(fan))
    return None


# class membership -----------------------------------------------------------


def class_membership(
    g: Graph, exact_bound: int = DEFAULT_EXACT_BOUND, budget: Budget | int | None = None
) -> ClassReport:
    """Decide {ISK4, triangle}-freeness with a witness for negative answers.

    Above ``exact_bound`` vertices the budgeted search is used and the report
    is flagged ``exact=False``; an exhausted budget yields ``inconclusive``.
    """
    exact = g.order <= exact_bound
    tri = find_triangle(g)
    if tri is not None:
        return ClassReport(OUT_OF_CLASS, tri, exact)
    try:
        w = find_isk4(g, exact_bound, budget)
    except SearchBudgetExceeded:
        return ClassReport(INCONCLUSIVE, None, exact)
    if w is not None:
        return ClassReport(OUT_OF_CLASS, w, exact)
    return ClassReport(IN_CLASS, None, exact)
