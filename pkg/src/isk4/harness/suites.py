"""Theorem suites: each checks one structural statement on a single graph.

A suite function receives an :class:`Analysis` (a per-graph cache of the
expensive recognizers) and returns an :class:`InstanceResult`.  Graphs that
do not meet a statement's hypotheses are reported as ``skip``; any budget
overrun makes the instance ``inconclusive``, never ``pass``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Callable

from ..coloring import SUCCESS, chromatic_oracle, three_color, verify_coloring
from ..decompose import (
    INCONCLUSIVE_STEP,
    NOT_IN_CLASS,
    check_step,
    contract_star_component,
    decomposition_step,
    find_clique_cutset,
    star_component_subgraph,
)
from ..graph import Graph, components, mask_of
from ..recognizers import (
    check_isk4_witness,
    class_membership,
    complete_bipartite_parts,
    find_isk4_exact,
    find_isk4_search,
    find_k33_subgraph,
    find_linkage,
    find_triangle,
    find_isk4,
    is_series_parallel,
)
from ..search import Budget
from ..sparse_cycles import check_outcome, sparse_cycle
from ..wheels import (
    wheel_is_proper,
    enumerate_holes,
    is_k_almost_proper,
    is_proper_wheel,
    iter_wheels,
    vertex_violation,
    min_spoke_proper_wheel,
    qualifying_paths,
    verify_path_theorem,
    verify_wheelmain,
)

__all__ = ["PASS", "FAIL", "SKIP", "INCONCLUSIVE", "InstanceResult", "Analysis", "SUITES"]

PASS = "pass"
FAIL = "fail"
SKIP = "skip"
INCONCLUSIVE = "inconclusive"


@dataclass
class InstanceResult:
    status: str
    checks: int = 0
    certificate: dict | None = None


class Analysis:
    """Lazily computed facts about one graph, sharing one search budget."""

    def __init__(self, g: Graph, exact_bound: int, budget: int | None) -> None:
        self.g = g
        self.exact_bound = exact_bound
        self.budget_limit = budget
        self.budget = Budget(budget)

    def fresh(self, g: Graph) -> "Analysis":
        return Analysis(g, self.exact_bound, self.budget_limit)

    @cached_property
    def triangle(self):
        return find_triangle(self.g)

    @cached_property
    def isk4(self):
        return find_isk4(self.g, self.exact_bound, self.budget)

    @cached_property
    def in_class(self) -> bool:
        return self.triangle is None and self.isk4 is None

    @cached_property
    def k33(self):
        return find_k33_subgraph(self.g)

    @cached_property
    def series_parallel(self) -> bool:
        return is_series_parallel(self.g).series_parallel

    @cached_property
    def holes(self) -> list[tuple[int, ...]]:
        return enumerate_holes(self.g, max_count=10**9, budget=self.budget)[0]

    @cached_property
    def wheels(self):
        return list(iter_wheels(self.g, self.holes))

    @cached_property
    def proper(self):
        return [w for w in self.wheels if wheel_is_proper(self.g, w)]

    @cached_property
    def centers(self) -> list[int]:
        return sorted({w.center for w in self.proper})

    def min_spoke(self, x: int):
        return min_spoke_proper_wheel(self.g, x, self.holes)


def _nolink(a: Analysis) -> InstanceResult:
    if not a.in_class:
        return InstanceResult(SKIP)
    g = a.g
    checks = 0
    for hole in a.holes:
        hm = mask_of(hole)
        for v in range(g.order):
            if hm >> v & 1:
                continue
            checks += 1
            w = find_linkage(g, v, hole, a.budget)
            if w is not None:
                return InstanceResult(FAIL, checks, w.to_dict())
    return InstanceResult(PASS, checks)


def _proper_exists(a: Analysis) -> InstanceResult:
    if not a.in_class or not a.wheels:
        return InstanceResult(SKIP)
    report = is_proper_wheel(a.g, a.wheels[0])
    if not report.proper:
        return InstanceResult(FAIL, 1, report.to_dict())
    return InstanceResult(PASS, 1)


def _wheel_hypotheses(a: Analysis) -> bool:
    return a.in_class and a.k33 is None and bool(a.centers)


def _wheelmain(a: Analysis) -> InstanceResult:
    if not _wheel_hypotheses(a):
        return InstanceResult(SKIP)
    checks = 0
    for x in a.centers:
        w = a.min_spoke(x)
        report = verify_wheelmain(a.g, w, a.holes)
        checks += 1
        if not report.ok:
            return InstanceResult(FAIL, checks, {"wheel": w.to_dict(), "failures": report.failures})
    return InstanceResult(PASS, checks)


def _paths(a: Analysis) -> InstanceResult:
    if not _wheel_hypotheses(a):
        return InstanceResult(SKIP)
    checks = 0
    for x in a.centers:
        w = a.min_spoke(x)
        for p in qualifying_paths(a.g, w, 6, a.budget):
            checks += 1
            if not verify_path_theorem(a.g, w, p, check_minimal=False):
                return InstanceResult(FAIL, checks, {"wheel": w.to_dict(), "path": list(p)})
    return InstanceResult(PASS, checks)


def _trichotomy_v2(a: Analysis) -> InstanceResult:
    if not a.in_class:
        return InstanceResult(SKIP)
    step = decomposition_step(a.g, a.exact_bound, a.budget)
    if step.kind == INCONCLUSIVE_STEP:
        return InstanceResult(INCONCLUSIVE, 1)
    if step.kind == NOT_IN_CLASS or not check_step(a.g, step):
        return InstanceResult(FAIL, 1, step.to_dict())
    return InstanceResult(PASS, 1)


def _three_color(a: Analysis) -> InstanceResult:
    if not a.in_class:
        return InstanceResult(SKIP)
    result = three_color(a.g, a.exact_bound, a.budget)
    if result.status != SUCCESS:
        status = INCONCLUSIVE if result.status == "inconclusive" else FAIL
        return InstanceResult(status, 1, result.to_dict() if status == FAIL else None)
    chi = chromatic_oracle(a.g, 4)
    ok = verify_coloring(a.g, result.coloring) and chi is not None and chi <= 3
    ok = ok and chi <= result.colors_used <= 3
    if not ok:
        return InstanceResult(FAIL, 1, {"coloring": list(result.coloring), "chromatic_number": chi})
    return InstanceResult(PASS, 1)


def _duffin(a: Analysis) -> InstanceResult:
    if not a.series_parallel:
        return InstanceResult(SKIP)
    g = a.g
    problems = {}
    if a.isk4 is not None:
        problems["isk4"] = a.isk4.to_dict()
    if a.wheels:
        problems["wheel"] = a.wheels[0].to_dict()
    if a.k33 is not None:
        problems["k33"] = a.k33.to_dict()
    if g.order and min(g.degrees()) > 2:
        problems["min_degree"] = min(g.degrees())
    return InstanceResult(FAIL if problems else PASS, 4, problems or None)


def _levesque(a: Analysis) -> InstanceResult:
    if not a.in_class:
        return InstanceResult(SKIP)
    ok = a.series_parallel or a.k33 is not None or bool(a.wheels)
    return InstanceResult(PASS if ok else FAIL, 1, None if ok else {"reason": "no outcome"})


def _todo(a: Analysis) -> InstanceResult:
    if not a.in_class or a.k33 is None:
        return InstanceResult(SKIP)
    ok = complete_bipartite_parts(a.g) is not None or find_clique_cutset(a.g) is not None
    return InstanceResult(PASS if ok else FAIL, 1, None if ok else {"k33": a.k33.to_dict()})


def _pairs(g: Graph):
    for v in range(g.order):
        yield v, v
    yield from g.edges()


def _main_noncenter(a: Analysis) -> InstanceResult:
    if not a.in_class or a.k33 is not None or a.series_parallel:
        return InstanceResult(SKIP)
    g = a.g
    centers = set(a.centers)
    checks = 0
    for x, y in _pairs(g):
        if x in centers or y in centers:
            continue
        checks += 1
        near = g.closed_mask(x) | g.closed_mask(y)
        if not any(g.degree(v) <= 2 for v in range(g.order) if not near >> v & 1):
            return InstanceResult(FAIL, checks, {"x": x, "y": y})
    return InstanceResult(PASS, checks)


def _girth(a: Analysis) -> InstanceResult:
    if not a.in_class or a.k33 is not None:
        return InstanceResult(SKIP)
    checks = 0
    for x, y in _pairs(a.g):
        checks += 1
        out = sparse_cycle(a.g, x, y, a.budget)
        if out.kind == "inconclusive":
            return InstanceResult(INCONCLUSIVE, checks)
        if not out.found or not check_outcome(a.g, x, y, out):
            return InstanceResult(FAIL, checks, {"x": x, "y": y, "outcome": out.to_dict()})
    return InstanceResult(PASS, checks)


def _star_components(g: Graph, s: int):
    return components(g, g.all_mask & ~g.closed_mask(s))


def _starcut(a: Analysis) -> InstanceResult:
    if not a.in_class or a.k33 is not None:
        return InstanceResult(SKIP)
    g = a.g
    centers = set(a.centers)
    checks = 0
    for s in range(g.order):
        for k in _star_components(g, s):
            h = star_component_subgraph(g, s, k)
            hc = {h.labels[v] for v in a.fresh(h).centers}
            checks += 1
            if s in hc or not hc - {s} <= centers:
                return InstanceResult(
                    FAIL, checks, {"s": s, "component": k, "centers_in_h": sorted(hc), "centers": sorted(centers)}
                )
    return InstanceResult(PASS, checks)


def _contracted(a: Analysis):
    """Yield ``(s, K, G')`` for every center ``s`` and series-parallel ``H``."""
    g = a.g
    for s in a.centers:
        for k in _star_components(g, s):
            if is_series_parallel(star_component_subgraph(g, s, k)):
                yield s, k, contract_star_component(g, s, k, tag="z")


def _contract(a: Analysis) -> InstanceResult:
    if not a.in_class or a.k33 is not None:
        return InstanceResult(SKIP)
    checks = 0
    for s, k, gp in _contracted(a):
        checks += 1
        report = class_membership(gp, a.exact_bound, a.budget)
        if report.verdict == "inconclusive":
            return InstanceResult(INCONCLUSIVE, checks)
        k33 = find_k33_subgraph(gp)
        if not report.in_class or k33 is not None:
            witness = report.witness.to_dict() if report.witness else k33.to_dict()
            return InstanceResult(FAIL, checks, {"s": s, "component": k, "witness": witness})
    return InstanceResult(PASS if checks else SKIP, checks)


def _noncenters(a: Analysis) -> InstanceResult:
    if not a.in_class or a.k33 is not None:
        return InstanceResult(SKIP)
    centers = set(a.centers)
    checks = 0
    for s, k, gp in _contracted(a):
        checks += 1
        z = gp.order - 1
        gc = a.fresh(gp).centers
        mapped = {gp.labels[v] for v in gc if v != z}
        if z in gc or not mapped - {s} <= centers:
            after = sorted(str(gp.labels[v]) for v in gc)
            return InstanceResult(FAIL, checks, {"s": s, "component": k, "centers_after": after})
    return InstanceResult(PASS if checks else SKIP, checks)


def _almost_proper(a: Analysis) -> InstanceResult:
    if not a.in_class or not a.wheels:
        return InstanceResult(SKIP)
    g = a.g
    best: dict[int, int] = {}
    for w in a.proper:
        best[w.center] = min(best.get(w.center, len(w.spokes)), len(w.spokes))
    checks = 0
    for w in a.wheels:
        wmask = w.rim_mask | (1 << w.center)
        violators = [v for v in range(g.order) if not wmask >> v & 1 and vertex_violation(g, w, v) is not None]
        if not violators:
            continue
        for k in (1, 2):
            for marked in itertools.combinations(w.spokes, k):
                if not is_k_almost_proper(g, w, marked, violators):
                    continue
                checks += 1
                have = best.get(w.center)
                ok = have is not None and (have <= len(w.spokes) if k == 2 else _has_proper_with(a, w.center, len(w.spokes)))
                if not ok:
                    return InstanceResult(FAIL, checks, {"wheel": w.to_dict(), "marked": list(marked), "k": k})
    return InstanceResult(PASS if checks else SKIP, checks)


def _has_proper_with(a: Analysis, center: int, spokes: int) -> bool:
    return any(w.center == center and len(w.spokes) == spokes for w in a.proper)


def _isk4_oracle(a: Analysis) -> InstanceResult:
    g = a.g
    exact = find_isk4_exact(g)
    search = find_isk4_search(g, a.budget)
    if (exact is None) != (search is None):
        return InstanceResult(
            FAIL, 1, {"exact": exact and exact.to_dict(), "search": search and search.to_dict()}
        )
    for w in (exact, search):
        if w is not None and not check_isk4_witness(g, w):
            return InstanceResult(FAIL, 1, {"invalid_witness": w.to_dict()})
    return InstanceResult(PASS, 1)


SUITES: dict[str, Callable[[Analysis], InstanceResult]] = {
    "nolink": _nolink,
    "proper-exists": _proper_exists,
    "wheelmain": _wheelmain,
    "paths": _paths,
    "v2-trichotomy": _trichotomy_v2,
    "3color": _three_color,
    "duffin": _duffin,
    "levesque-trichotomy": _levesque,
    "todo": _todo,
    "main-noncenter": _main_noncenter,
    "girth": _girth,
    "starcut": _starcut,
    "contract": _contract,
    "noncenters": _noncenters,
    "almost-proper": _almost_proper,
    "isk4-oracle": _isk4_oracle,
}
