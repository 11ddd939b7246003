"""Induced cycles whose vertices are almost all of degree two.

Each search returns a certificate of one of a small number of outcomes.  The
searches try the outcomes in a fixed order and return the first valid one;
:func:`check_outcome` re-validates any certificate from scratch, so an
alternative implementation can be tested against the same checker.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, components, induced_subgraph, is_connected_mask, mask_of, members
from .recognizers import find_triangle, is_series_parallel
from .search import Budget, SearchBudgetExceeded, fans, induced_cycles_by_length, two_core

__all__ = [
    "ALL_NEIGHBORHOOD",
    "LOW_DEGREE_FAR_VERTEX",
    "CYCLE_THROUGH_XY",
    "CYCLE_WITH_APEX",
    "FAR_CYCLE",
    "NO_CERTIFICATE",
    "INCONCLUSIVE",
    "SparseCycleOutcome",
    "K13Result",
    "apex_forest_cycle",
    "far_cycle_sp",
    "sparse_cycle",
    "check_outcome",
    "minimal_k13",
    "check_k13",
]

ALL_NEIGHBORHOOD = "all_neighborhood"
LOW_DEGREE_FAR_VERTEX = "low_degree_far_vertex"
CYCLE_THROUGH_XY = "cycle_through_xy"
CYCLE_WITH_APEX = "cycle_with_apex"
FAR_CYCLE = "far_cycle"
NO_CERTIFICATE = "no_certificate"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class SparseCycleOutcome:
    kind: str
    vertex: int | None = None
    cycle: tuple[int, ...] = ()
    apex: int | None = None
    exceptional: tuple[int, ...] = ()

    @property
    def found(self) -> bool:
        return self.kind not in (NO_CERTIFICATE, INCONCLUSIVE)

    def to_dict(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.kind == LOW_DEGREE_FAR_VERTEX:
            out["vertex"] = self.vertex
        if self.cycle:
            out["cycle"] = list(self.cycle)
            out["exceptional"] = list(self.exceptional)
        if self.kind == CYCLE_WITH_APEX:
            out["apex"] = self.apex
        return out


def _closed(g: Graph, *vs: int) -> int:
    m = 0
    for v in vs:
        m |= g.closed_mask(v)
    return m


def _is_induced_cycle(g: Graph, cycle) -> bool:
    L = len(cycle)
    if L < 3 or len(set(cycle)) != L or any(not 0 <= v < g.order for v in cycle):
        return False
    cm = mask_of(cycle)
    return all(
        g.masks[v] & cm == (1 << cycle[i - 1]) | (1 << cycle[(i + 1) % L]) for i, v in enumerate(cycle)
    )


def _heavy(g: Graph, vertices) -> tuple[int, ...]:
    return tuple(sorted(v for v in vertices if g.degree(v) > 2))


def _check_pair(g: Graph, x: int, y: int) -> None:
    if not (0 <= x < g.order and 0 <= y < g.order):
        raise GraphError("vertex out of range")
    if x != y and not g.adjacent(x, y):
        raise GraphError("x and y must be equal or adjacent")


def _far_low_degree(g: Graph, far: int) -> int | None:
    return next((v for v in members(far) if g.degree(v) <= 1), None)


# forest plus apex -------------------------------------------------------------


def apex_forest_cycle(g: Graph, x: int, budget: Budget | int | None = None) -> SparseCycleOutcome:
    """Outcome search for a graph that becomes a forest after deleting ``x``."""
    rest = g.all_mask & ~(1 << x)
    n_rest = g.order - 1
    m_rest = sum(bin(g.masks[v] & rest).count("1") for v in members(rest)) // 2
    if m_rest != n_rest - len(components(g, rest)):
        raise GraphError("G - x is not a forest")
    far = g.all_mask & ~g.closed_mask(x)
    if not far and m_rest == 0:
        return SparseCycleOutcome(ALL_NEIGHBORHOOD)
    v = _far_low_degree(g, far)
    if v is not None:
        return SparseCycleOutcome(LOW_DEGREE_FAR_VERTEX, vertex=v)
    for c in induced_cycles_by_length(g, 3, None, budget):
        if x not in c:
            continue
        heavy = _heavy(g, (u for u in c if u != x))
        if len(heavy) <= 1:
            return SparseCycleOutcome(CYCLE_THROUGH_XY, cycle=c, exceptional=heavy)
    return SparseCycleOutcome(NO_CERTIFICATE)


# series-parallel far cycle ------------------------------------------------------


def far_cycle_sp(g: Graph, x: int, y: int, budget: Budget | int | None = None) -> SparseCycleOutcome:
    """Cycle avoiding ``x, y`` with at most two vertices of degree above two."""
    _check_pair(g, x, y)
    if not is_series_parallel(g):
        raise GraphError("graph is not series-parallel")
    avoid = g.all_mask & ~((1 << x) | (1 << y))
    if not two_core(g, avoid):
        raise GraphError("G - {x, y} has no cycle")
    v = _far_low_degree(g, g.all_mask & ~_closed(g, x, y))
    if v is not None:
        return SparseCycleOutcome(LOW_DEGREE_FAR_VERTEX, vertex=v)
    for c in induced_cycles_by_length(g, 3, avoid, budget):
        heavy = _heavy(g, c)
        if len(heavy) <= 2:
            return SparseCycleOutcome(FAR_CYCLE, cycle=c, exceptional=heavy)
    return SparseCycleOutcome(NO_CERTIFICATE)


# general outcome search ------------------------------------------------------


def sparse_cycle(g: Graph, x: int, y: int, budget: Budget | int | None = None) -> SparseCycleOutcome:
    """First valid outcome among the four, tried in order.

    Degrees are always taken in ``g``.  On inputs outside the intended class
    the result may be ``no_certificate``; an exhausted budget gives
    ``inconclusive``.
    """
    _check_pair(g, x, y)
    near = _closed(g, x, y)
    far = g.all_mask & ~near
    if not far:
        return SparseCycleOutcome(ALL_NEIGHBORHOOD)
    v = _far_low_degree(g, far)
    if v is not None:
        return SparseCycleOutcome(LOW_DEGREE_FAR_VERTEX, vertex=v)
    try:
        cycles = list(induced_cycles_by_length(g, 3, None, budget))
    except SearchBudgetExceeded:
        return SparseCycleOutcome(INCONCLUSIVE)
    for c in cycles:
        if x in c or y in c:
            heavy = _heavy(g, (u for u in c if not near >> u & 1))
            if len(heavy) <= 1:
                return SparseCycleOutcome(CYCLE_THROUGH_XY, cycle=c, exceptional=heavy)
    for c in cycles:
        if x in c or y in c:
            continue
        for z in sorted(c):
            zn = g.closed_mask(z)
            heavy = _heavy(g, (u for u in c if not zn >> u & 1))
            if len(heavy) <= 1:
                return SparseCycleOutcome(CYCLE_WITH_APEX, cycle=c, apex=z, exceptional=heavy)
    return SparseCycleOutcome(NO_CERTIFICATE)


def check_outcome(g: Graph, x: int, y: int, outcome: SparseCycleOutcome, mode: str = "girth") -> bool:
    """Validate a certificate from scratch.

    ``mode`` selects the outcome family: ``"tree"`` (forest plus apex ``x``),
    ``"farcycle"`` (series-parallel far cycle) or ``"girth"`` (the general
    four-way outcome).
    """
    kind = outcome.kind
    near = _closed(g, x, y)
    if kind == ALL_NEIGHBORHOOD:
        if mode == "farcycle" or near != g.all_mask:
            return False
        if mode == "tree":
            rest = g.all_mask & ~(1 << x)
            return all(not g.masks[v] & rest for v in members(rest))
        return True
    if kind == LOW_DEGREE_FAR_VERTEX:
        v = outcome.vertex
        return v is not None and 0 <= v < g.order and not near >> v & 1 and g.degree(v) <= 1
    if not _is_induced_cycle(g, outcome.cycle):
        return False
    c = outcome.cycle
    if kind == CYCLE_THROUGH_XY:
        if mode == "tree":
            return x in c and len([u for u in c if u != x and g.degree(u) != 2]) <= 1
        if mode != "girth" or (x not in c and y not in c):
            return False
        return len([u for u in c if not near >> u & 1 and g.degree(u) > 2]) <= 1
    if kind == CYCLE_WITH_APEX:
        z = outcome.apex
        if mode != "girth" or x in c or y in c or z not in c:
            return False
        zn = g.closed_mask(z)
        return len([u for u in c if not zn >> u & 1 and g.degree(u) > 2]) <= 1
    if kind == FAR_CYCLE:
        if mode != "farcycle" or x in c or y in c:
            return False
        return len([u for u in c if g.degree(u) != 2]) <= 2
    return False


# minimal connected subgraphs through three leaves ---------------------------


@dataclass(frozen=True)
class K13Result:
    """``kind`` is ``"claw"`` (a subdivided claw) or ``"triangle"``.

    ``vertices`` is a minimal connected induced subgraph holding the three
    leaves; for a claw, ``paths`` run from the branch vertex to each leaf.
    """

    kind: str
    vertices: tuple[int, ...]
    center: int | None = None
    paths: tuple[tuple[int, ...], ...] = ()
    triangle: tuple[int, int, int] | None = None

    def to_dict(self) -> dict:
        out = {"kind": self.kind, "vertices": list(self.vertices)}
        if self.kind == "claw":
            out["center"] = self.center
            out["paths"] = [list(p) for p in self.paths]
        else:
            out["triangle"] = list(self.triangle)
        return out


def minimal_k13(g: Graph, a: int, b: int, c: int, budget: Budget | int | None = None) -> K13Result:
    """A minimal connected induced subgraph containing leaves ``a, b, c``.

    First looks for an induced subdivided claw with ``a, b, c`` as its
    leaves; if there is none, a greedily minimized connected subgraph is
    returned together with a triangle inside it.
    """
    leaves = (a, b, c)
    if len(set(leaves)) != 3:
        raise GraphError("a, b, c must be distinct")
    if not is_connected_mask(g, g.all_mask) or g.order == 0:
        raise GraphError("graph must be connected")
    if any(g.degree(v) != 1 for v in leaves):
        raise GraphError("a, b, c must have degree one")
    base = mask_of(leaves)
    for t in range(g.order):
        if base >> t & 1:
            continue
        for fan in fans(g, t, base, 3, None, budget):
            paths = tuple(sorted(fan, key=lambda p: leaves.index(p[-1])))
            verts = tuple(sorted({v for p in paths for v in p}))
            return K13Result("claw", verts, center=t, paths=paths)
    keep = g.all_mask
    changed = True
    while changed:
        changed = False
        for v in members(keep & ~base):
            trial = keep & ~(1 << v)
            if is_connected_mask(g, trial):
                keep = trial
                changed = True
    verts = members(keep)
    tri = find_triangle(induced_subgraph(g, verts))
    if tri is None:
        raise AssertionError("minimal connected subgraph is neither a claw nor contains a triangle")
    return K13Result("triangle", tuple(verts), triangle=tuple(verts[i] for i in tri.vertices))


def check_k13(g: Graph, a: int, b: int, c: int, result: K13Result) -> bool:
    verts = set(result.vertices)
    if not {a, b, c} <= verts:
        return False
    vm = mask_of(verts)
    if not is_connected_mask(g, vm):
        return False
    # minimality: no single non-leaf vertex can be dropped
    for v in verts - {a, b, c}:
        if is_connected_mask(g, vm & ~(1 << v)):
            return False
    if result.kind == "triangle":
        t = result.triangle
        return t is not None and set(t) <= verts and all(
            g.adjacent(p, q) for p, q in ((t[0], t[1]), (t[1], t[2]), (t[0], t[2]))
        )
    if result.kind != "claw":
        return False
    degs = {v: bin(g.masks[v] & vm).count("1") for v in verts}
    leaves = {v for v, d in degs.items() if d == 1}
    centers = [v for v, d in degs.items() if d == 3]
    if leaves != {a, b, c} or centers != [result.center]:
        return False
    edges = sum(degs.values()) // 2
    return all(d <= 3 for d in degs.values()) and edges == len(verts) - 1
