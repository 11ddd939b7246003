"""Certified 3-coloring driven by decomposition steps, plus an exact oracle.

``three_color`` follows the induction: peel a vertex of degree at most two and
give it the least free color, 2-color a complete bipartite graph, or split
along a clique cutset, color both sides, and permute one side's colors to
agree on the cutset.  Results on identical subgraphs are memoized by their
graph6 text.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .decompose import (
    CLIQUE_CUTSET,
    COMPLETE_BIPARTITE,
    INCONCLUSIVE_STEP,
    LOW_DEGREE,
    NOT_IN_CLASS,
    decomposition_step,
)
from .formats import emit_graph6
from .graph import Graph, induced_subgraph
from .recognizers import DEFAULT_EXACT_BOUND, Isk4Witness, TriangleWitness
from .search import Budget, SearchBudgetExceeded

__all__ = [
    "SUCCESS",
    "REFUSED",
    "INCONCLUSIVE",
    "ColorResult",
    "three_color",
    "verify_coloring",
    "coloring_violation",
    "chromatic_oracle",
]

SUCCESS = "success"
REFUSED = "refused"
INCONCLUSIVE = "inconclusive"

_PERMS = list(itertools.permutations(range(3)))


@dataclass(frozen=True)
class ColorResult:
    status: str
    coloring: tuple[int, ...] | None = None
    witness: TriangleWitness | Isk4Witness | None = None

    @property
    def colors_used(self) -> int:
        return len(set(self.coloring)) if self.coloring else 0

    def to_dict(self) -> dict:
        out: dict = {"status": self.status}
        if self.status == SUCCESS:
            out["coloring"] = list(self.coloring)
            out["colors_used"] = self.colors_used
        elif self.status == REFUSED:
            out["witness"] = self.witness.to_dict()
        return out


class _Refusal(Exception):
    def __init__(self, witness) -> None:
        self.witness = witness


class _Inconclusive(Exception):
    pass


def three_color(
    g: Graph, exact_bound: int = DEFAULT_EXACT_BOUND, budget: Budget | int | None = None
) -> ColorResult:
    budget = budget if isinstance(budget, Budget) else Budget(budget)
    memo: dict[str, object] = {}
    try:
        colors = _solve(g.relabeled(None), exact_bound, budget, memo)
    except _Refusal as r:
        return ColorResult(REFUSED, witness=r.witness)
    except (_Inconclusive, SearchBudgetExceeded):
        return ColorResult(INCONCLUSIVE)
    return ColorResult(SUCCESS, tuple(colors))


def _least_free(g: Graph, v: int, colors: dict[int, int]) -> int:
    used = {colors[u] for u in g.neighbors(v) if u in colors}
    return min(c for c in range(4) if c not in used)


def _solve(g: Graph, exact_bound, budget, memo) -> list[int]:
    """Color ``g``; the result is indexed by ``g``'s own vertices."""
    key = emit_graph6(g)
    if key in memo:
        hit = memo[key]
        if isinstance(hit, _Refusal):
            raise hit
        return list(hit)
    try:
        colors = _solve_uncached(g, exact_bound, budget, memo)
    except _Refusal as r:
        memo[key] = r
        raise
    memo[key] = tuple(colors)
    return colors


def _solve_uncached(g: Graph, exact_bound, budget, memo) -> list[int]:
    # peel low-degree vertices iteratively; ``alive`` indexes into g
    alive = list(range(g.order))
    peeled: list[int] = []
    cur = g
    while True:
        if cur.order <= 3:
            base: dict[int, int] = {}
            for v in range(cur.order):
                base[v] = _least_free(cur, v, base)
            core = [base[v] for v in range(cur.order)]
            break
        step = decomposition_step(cur, exact_bound, budget)
        if step.kind == LOW_DEGREE:
            peeled.append(alive[step.vertex])
            del alive[step.vertex]
            cur = induced_subgraph(g, alive).relabeled(None)
            continue
        if step.kind == COMPLETE_BIPARTITE:
            side_b = set(step.parts[1])
            core = [1 if v in side_b else 0 for v in range(cur.order)]
            break
        if step.kind == CLIQUE_CUTSET:
            core = _merge_cutset(cur, step, exact_bound, budget, memo)
            break
        if step.kind == NOT_IN_CLASS:
            raise _Refusal(step.witness.relabel(alive))
        if step.kind == INCONCLUSIVE_STEP:
            raise _Inconclusive()
        raise AssertionError(f"unexpected step {step.kind}")
    colors = {alive[i]: c for i, c in enumerate(core)}
    for v in reversed(peeled):
        colors[v] = _least_free(g, v, colors)
    return [colors[v] for v in range(g.order)]


def _merge_cutset(g: Graph, step, exact_bound, budget, memo) -> list[int]:
    cut = list(step.cutset)
    halves = []
    for side in step.sides:
        verts = sorted(list(side) + cut)
        sub = induced_subgraph(g, verts).relabeled(None)
        try:
            sub_colors = _solve(sub, exact_bound, budget, memo)
        except _Refusal as r:
            raise _Refusal(r.witness.relabel(verts)) from None
        halves.append(dict(zip(verts, sub_colors)))
    first, second = halves
    perm = next(p for p in _PERMS if all(p[second[v]] == first[v] for v in cut))
    merged = dict(first)
    for v, c in second.items():
        merged[v] = perm[c]
    return [merged[v] for v in range(g.order)]


def coloring_violation(g: Graph, coloring) -> tuple | None:
    """First problem with ``coloring``: ``("range", v)`` or ``("edge", u, v)``."""
    if len(coloring) != g.order:
        return ("length", len(coloring))
    for v, c in enumerate(coloring):
        if c not in (0, 1, 2):
            return ("range", v)
    for u, v in g.edges():
        if coloring[u] == coloring[v]:
            return ("edge", u, v)
    return None


def verify_coloring(g: Graph, coloring) -> bool:
    return coloring_violation(g, coloring) is None


def chromatic_oracle(g: Graph, k_max: int = 4) -> int | None:
    """Exact chromatic number if at most ``k_max``, else None.

    Plain backtracking: vertices by descending degree (ties by index), colors
    tried least first.
    """
    if k_max > 4:
        raise ValueError("k_max must be at most 4")
    n = g.order
    if n == 0:
        return 0
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    for k in range(1, k_max + 1):
        if _colorable(g, order, k):
            return k
    return None


def _colorable(g: Graph, order: list[int], k: int) -> bool:
    colors = [-1] * g.order
    adj = g.adjacency

    def place(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        used = {colors[u] for u in adj[v]}
        for c in range(k):
            if c not in used:
                colors[v] = c
                if place(i + 1):
                    return True
        colors[v] = -1
        return False

    return place(0)
