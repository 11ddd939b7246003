"""One decomposition step: low-degree vertex, complete bipartite, or clique cutset.

Graphs without triangles and without ISK4s always admit one of the three
outcomes.  When none applies the graph is outside the class and the step
carries a triangle or ISK4 witness instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .formats import emit_graph6
from .graph import Graph, GraphError, components, contract_component, induced_subgraph, mask_of
from .recognizers import (
    DEFAULT_EXACT_BOUND,
    INCONCLUSIVE,
    OUT_OF_CLASS,
    Isk4Witness,
    TriangleWitness,
    class_membership,
    complete_bipartite_parts,
    find_triangle,
)
from .search import Budget, articulation_points

__all__ = [
    "LOW_DEGREE",
    "COMPLETE_BIPARTITE",
    "CLIQUE_CUTSET",
    "NOT_IN_CLASS",
    "INCONCLUSIVE_STEP",
    "DecompositionStep",
    "TheoremViolation",
    "TriangleError",
    "find_clique_cutset",
    "find_low_degree_vertex",
    "decomposition_step",
    "decomposition_tree",
    "check_step",
    "star_component_subgraph",
    "star_neighbors",
    "contract_star_component",
]

LOW_DEGREE = "low_degree"
COMPLETE_BIPARTITE = "complete_bipartite"
CLIQUE_CUTSET = "clique_cutset"
NOT_IN_CLASS = "not_in_class"
INCONCLUSIVE_STEP = "inconclusive"


class TriangleError(GraphError):
    """Raised by the triangle-free cutset search when given a triangle."""

    def __init__(self, triangle: tuple[int, int, int]) -> None:
        self.triangle = triangle
        super().__init__(f"graph contains triangle {triangle}; use class_membership instead")


class TheoremViolation(AssertionError):
    """No outcome applies although the graph was found to be in the class."""


@dataclass(frozen=True)
class DecompositionStep:
    kind: str
    vertex: int | None = None
    cutset: tuple[int, ...] = ()
    sides: tuple[tuple[int, ...], ...] = ()
    parts: tuple[tuple[int, ...], ...] = ()
    witness: TriangleWitness | Isk4Witness | None = None

    def to_dict(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.kind == LOW_DEGREE:
            out["vertex"] = self.vertex
        elif self.kind == CLIQUE_CUTSET:
            out["cutset"] = list(self.cutset)
            out["sides"] = [list(s) for s in self.sides]
        elif self.kind == COMPLETE_BIPARTITE:
            out["parts"] = [list(p) for p in self.parts]
        elif self.kind == NOT_IN_CLASS:
            out["witness"] = self.witness.to_dict()
        return out


def _split(g: Graph, cut: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    rest = g.all_mask & ~mask_of(cut)
    comps = components(g, rest)
    if len(comps) < 2:
        return None
    first = tuple(comps[0])
    second = tuple(sorted(v for c in comps[1:] for v in c))
    return first, second


def find_clique_cutset(g: Graph) -> tuple[tuple[int, ...], tuple[tuple[int, ...], tuple[int, ...]]] | None:
    """Least clique cutset of a triangle-free graph under (size, lex).

    Returns ``(cutset, (side1, side2))`` where ``side1`` is the component of
    ``G - cutset`` holding the least remaining vertex and ``side2`` the rest.
    """
    tri = find_triangle(g)
    if tri is not None:
        raise TriangleError(tri.vertices)
    if g.order < 2:
        return None
    sides = _split(g, ())
    if sides is not None:
        return (), sides
    cuts = articulation_points(g)
    if cuts:
        v = cuts[0]
        return (v,), _split(g, (v,))
    for u, v in g.edges():
        sides = _split(g, (u, v))
        if sides is not None:
            return (u, v), sides
    return None


def find_low_degree_vertex(g: Graph) -> int | None:
    return next((v for v in range(g.order) if g.degree(v) <= 2), None)


def decomposition_step(
    g: Graph, exact_bound: int = DEFAULT_EXACT_BOUND, budget: Budget | int | None = None
) -> DecompositionStep:
    """Apply the checks in the fixed order low degree, complete bipartite, cutset."""
    v = find_low_degree_vertex(g)
    if v is not None:
        return DecompositionStep(LOW_DEGREE, vertex=v)
    parts = complete_bipartite_parts(g)
    if parts is not None:
        return DecompositionStep(COMPLETE_BIPARTITE, parts=(tuple(parts[0]), tuple(parts[1])))
    tri = find_triangle(g)
    if tri is not None:
        return DecompositionStep(NOT_IN_CLASS, witness=tri)
    found = find_clique_cutset(g)
    if found is not None:
        cut, sides = found
        return DecompositionStep(CLIQUE_CUTSET, cutset=cut, sides=sides)
    report = class_membership(g, exact_bound, budget)
    if report.verdict == OUT_OF_CLASS:
        return DecompositionStep(NOT_IN_CLASS, witness=report.witness)
    if report.verdict == INCONCLUSIVE:
        return DecompositionStep(INCONCLUSIVE_STEP)
    raise TheoremViolation(f"no decomposition outcome for in-class graph {emit_graph6(g)}")


def check_step(g: Graph, step: DecompositionStep) -> bool:
    """Independently validate a step against its invariants."""
    if step.kind == LOW_DEGREE:
        return step.vertex is not None and g.degree(step.vertex) <= 2
    if step.kind == COMPLETE_BIPARTITE:
        a, b = (set(p) for p in step.parts)
        if a & b or a | b != set(range(g.order)):
            return False
        return all(g.adjacent(u, v) == ((u in a) != (v in a)) for u in range(g.order) for v in range(u))
    if step.kind == CLIQUE_CUTSET:
        cut = step.cutset
        if any(not g.adjacent(u, v) for i, u in enumerate(cut) for v in cut[i + 1:]):
            return False
        s1, s2 = (set(s) for s in step.sides)
        if not s1 or not s2 or s1 & s2 or s1 | s2 | set(cut) != set(range(g.order)) or set(cut) & (s1 | s2):
            return False
        return not any(g.adjacent(u, v) for u in s1 for v in s2)
    if step.kind == NOT_IN_CLASS:
        return step.witness is not None and step.witness.validate(g)
    return step.kind == INCONCLUSIVE_STEP


def decomposition_tree(
    g: Graph, exact_bound: int = DEFAULT_EXACT_BOUND, budget: Budget | int | None = None
) -> dict:
    """Apply steps recursively; vertices in the tree are those of ``g``."""
    root = g.relabeled(None)
    return _tree(root, exact_bound, budget)


def _tree(g: Graph, exact_bound, budget) -> dict:
    labels = g.labels
    step = decomposition_step(g, exact_bound, budget)
    node = _relabel_step_dict(step.to_dict(), labels)
    node["vertices"] = list(labels)
    if step.kind == LOW_DEGREE:
        if g.order > 1:
            keep = [u for u in range(g.order) if u != step.vertex]
            node["children"] = [_tree(induced_subgraph(g, keep), exact_bound, budget)]
    elif step.kind == CLIQUE_CUTSET:
        node["children"] = [
            _tree(induced_subgraph(g, list(side) + list(step.cutset)), exact_bound, budget)
            for side in step.sides
        ]
    return node


def _relabel_step_dict(d: dict, labels) -> dict:
    def fix(x):
        if isinstance(x, list):
            return [fix(y) for y in x]
        if isinstance(x, int) and not isinstance(x, bool):
            return labels[x]
        if isinstance(x, dict):
            return {k: (v if k == "kind" else fix(v)) for k, v in x.items()}
        return x

    return {k: (v if k == "kind" else fix(v)) for k, v in d.items()}


# star components ------------------------------------------------------------


def _require_star_component(g: Graph, s: int, k: Sequence[int]) -> int:
    kmask = mask_of(k)
    rest = g.all_mask & ~g.closed_mask(s)
    if not kmask or mask_of(next((c for c in components(g, rest) if c[0] == min(k)), [])) != kmask:
        raise GraphError("vertex set is not a component of G - N[s]")
    return kmask


def star_neighbors(g: Graph, s: int, k: Sequence[int]) -> list[int]:
    """Neighbors of ``s`` that have a neighbor in ``k``."""
    kmask = _require_star_component(g, s, k)
    return [u for u in g.neighbors(s) if g.masks[u] & kmask]


def star_component_subgraph(g: Graph, s: int, k: Sequence[int]) -> Graph:
    """``G|(K + N + s)``; labels trace back to ``g``."""
    nb = star_neighbors(g, s, k)
    return induced_subgraph(g, list(k) + nb + [s])


def contract_star_component(g: Graph, s: int, k: Sequence[int], tag="z") -> Graph:
    """Contract the component ``k`` of ``G - N[s]`` to a new last vertex."""
    _require_star_component(g, s, k)
    return contract_component(g, k, tag)
