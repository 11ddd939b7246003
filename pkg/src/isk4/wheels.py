"""Wheels: holes with a center, their sectors, and properness checks.

A wheel ``(C, x)`` is a hole ``C`` plus a vertex ``x`` with at least three
neighbors on ``C``.  The neighbors are the spokes; the sectors are the rim
paths between consecutive spokes.  A wheel is proper when every outside
vertex has all of its rim neighbors inside one sector, and every outside
vertex with three or more rim neighbors is adjacent to the center.

Searches over holes are exhaustive and charge a shared :class:`Budget`; a
budget overrun raises :class:`SearchBudgetExceeded` instead of returning a
possibly wrong "absent".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .graph import Graph, GraphError, components, mask_of, members
from .recognizers import validate_hole
from .search import Budget, induced_cycles_by_length, induced_paths

__all__ = [
    "DEFAULT_HOLE_CAP",
    "Wheel",
    "ProperWheelReport",
    "ProperWheelSearch",
    "WheelmainReport",
    "make_wheel",
    "check_wheel",
    "enumerate_holes",
    "iter_holes",
    "iter_wheels",
    "find_wheel",
    "is_proper_wheel",
    "wheel_is_proper",
    "vertex_violation",
    "find_proper_wheel",
    "proper_wheel_search",
    "proper_wheels",
    "proper_wheel_centers",
    "min_spoke_proper_wheel",
    "is_proper_wheel_center",
    "is_non_offensive",
    "non_offensive_spokes",
    "is_k_almost_proper",
    "verify_wheelmain",
    "verify_path_theorem",
    "qualifying_paths",
]

DEFAULT_HOLE_CAP = 10**6


@dataclass(frozen=True)
class Wheel:
    """Rim in canonical rotation, center, sorted spokes, sectors in rim order.

    ``sectors[i]`` runs along the rim from the i-th spoke (in rim order) to
    the next one; consecutive sectors share their common end.
    """

    rim: tuple[int, ...]
    center: int
    spokes: tuple[int, ...]
    sectors: tuple[tuple[int, ...], ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.rim + (self.center,)))

    @property
    def rim_mask(self) -> int:
        return mask_of(self.rim)

    def interior(self, i: int) -> tuple[int, ...]:
        return self.sectors[i][1:-1]

    def to_dict(self) -> dict:
        return {
            "rim": list(self.rim),
            "center": self.center,
            "spokes": list(self.spokes),
            "sectors": [list(s) for s in self.sectors],
        }


def _canonical_rim(rim: Sequence[int]) -> tuple[int, ...]:
    i = rim.index(min(rim))
    r = tuple(rim[i:]) + tuple(rim[:i])
    if len(r) > 2 and r[-1] < r[1]:
        r = (r[0],) + tuple(reversed(r[1:]))
    return r


def make_wheel(g: Graph, rim: Sequence[int], center: int) -> Wheel:
    """Build a wheel, raising ``GraphError`` if ``(rim, center)`` is not one."""
    validate_hole(g, rim)
    if center in rim:
        raise GraphError("center lies on the rim")
    if not 0 <= center < g.order:
        raise GraphError("center out of range")
    rim = _canonical_rim(list(rim))
    cmask = g.masks[center]
    pos = [i for i, v in enumerate(rim) if cmask >> v & 1]
    if len(pos) < 3:
        raise GraphError("center has fewer than three neighbors on the rim")
    L = len(rim)
    sectors = []
    for k, start in enumerate(pos):
        stop = pos[(k + 1) % len(pos)]
        seg = [rim[start]]
        i = start
        while i != stop:
            i = (i + 1) % L
            seg.append(rim[i])
        sectors.append(tuple(seg))
    spokes = tuple(sorted(rim[i] for i in pos))
    return Wheel(rim, center, spokes, tuple(sectors))


def check_wheel(g: Graph, w: Wheel) -> bool:
    """Re-derive every wheel invariant from scratch."""
    try:
        validate_hole(g, w.rim)
    except GraphError:
        return False
    if w.center in w.rim or not 0 <= w.center < g.order:
        return False
    spokes = sorted(v for v in w.rim if g.adjacent(v, w.center))
    if tuple(spokes) != w.spokes or len(spokes) < 3:
        return False
    sset = set(spokes)
    if len(w.sectors) != len(spokes):
        return False
    rim_pos = {v: i for i, v in enumerate(w.rim)}
    L = len(w.rim)
    for k, sec in enumerate(w.sectors):
        if sec[0] not in sset or sec[-1] not in sset or len(sec) < 2:
            return False
        if any(v in sset for v in sec[1:-1]):
            return False
        for a, b in zip(sec, sec[1:]):
            if (rim_pos[b] - rim_pos[a]) % L != 1:
                return False
        if sec[-1] != w.sectors[(k + 1) % len(w.sectors)][0]:
            return False
    return sum(len(s) - 1 for s in w.sectors) == L


# holes and wheels -----------------------------------------------------------


def iter_holes(g: Graph, budget: Budget | int | None = None, allowed: int | None = None) -> Iterator[tuple[int, ...]]:
    """Holes in (length, lexicographic) order, lazily."""
    return induced_cycles_by_length(g, 4, allowed, budget)


def enumerate_holes(
    g: Graph, max_count: int = DEFAULT_HOLE_CAP, budget: Budget | int | None = None
) -> tuple[list[tuple[int, ...]], bool]:
    """Holes in (length, lexicographic) order; the flag is true if truncated."""
    out = []
    for h in iter_holes(g, budget):
        if len(out) >= max_count:
            return out, True
        out.append(h)
    return out, False


def iter_wheels(
    g: Graph, holes: Sequence[tuple[int, ...]] | None = None, budget: Budget | int | None = None
) -> Iterator[Wheel]:
    """All wheels ordered by (rim length, rim, center)."""
    source = iter_holes(g, budget) if holes is None else holes
    masks = g.masks
    for hole in source:
        hmask = mask_of(hole)
        for v in range(g.order):
            if not hmask >> v & 1 and bin(masks[v] & hmask).count("1") >= 3:
                yield make_wheel(g, hole, v)


def find_wheel(g: Graph, holes=None, budget: Budget | int | None = None) -> Wheel | None:
    """A wheel of minimum rim length; ties by rim sequence, then center."""
    return next(iter_wheels(g, holes, budget), None)


@dataclass(frozen=True)
class ProperWheelReport:
    wheel: Wheel
    proper: bool
    violator: int | None = None
    bullet: int | None = None

    def to_dict(self) -> dict:
        return {
            "wheel": self.wheel.to_dict(),
            "proper": self.proper,
            "violator": self.violator,
            "bullet": self.bullet,
        }


def _in_one_sector(w: Wheel, rim_nbrs: int) -> bool:
    return any(rim_nbrs & ~mask_of(s) == 0 for s in w.sectors)


def vertex_violation(g: Graph, w: Wheel, v: int) -> int | None:
    """Which properness condition the outside vertex ``v`` breaks (1 or 2), if any."""
    hit = g.masks[v] & w.rim_mask
    if not _in_one_sector(w, hit):
        return 1
    if bin(hit).count("1") >= 3 and not g.adjacent(v, w.center):
        return 2
    return None


def is_proper_wheel(g: Graph, w: Wheel, ignore: int = 0) -> ProperWheelReport:
    """Check properness; vertices in mask ``ignore`` are treated as deleted."""
    if not check_wheel(g, w):
        raise GraphError("not a valid wheel of this graph")
    wmask = w.rim_mask | (1 << w.center)
    for v in range(g.order):
        if wmask >> v & 1 or ignore >> v & 1:
            continue
        bullet = vertex_violation(g, w, v)
        if bullet is not None:
            return ProperWheelReport(w, False, v, bullet)
    return ProperWheelReport(w, True)


def wheel_is_proper(g: Graph, w: Wheel, ignore: int = 0) -> bool:
    """Boolean form of :func:`is_proper_wheel` without re-validating ``w``."""
    wmask = w.rim_mask | (1 << w.center)
    for v in range(g.order):
        if not (wmask | ignore) >> v & 1 and vertex_violation(g, w, v) is not None:
            return False
    return True


@dataclass(frozen=True)
class ProperWheelSearch:
    """Outcome of a proper-wheel search.

    ``wheel`` is None either because ``g`` is wheel-free or because only
    improper wheels exist (``improper_only``).
    """

    wheel: Wheel | None
    wheel_free: bool
    improper_only: bool

    def to_dict(self) -> dict:
        return {
            "wheel": None if self.wheel is None else self.wheel.to_dict(),
            "wheel_free": self.wheel_free,
            "improper_only": self.improper_only,
        }


def proper_wheel_search(g: Graph, holes=None, budget: Budget | int | None = None) -> ProperWheelSearch:
    """Minimum-rim wheel if proper, else the first proper wheel in wheel order."""
    first = None
    for w in iter_wheels(g, holes, budget):
        if first is None:
            first = w
        if wheel_is_proper(g, w):
            return ProperWheelSearch(w, False, False)
    if first is None:
        return ProperWheelSearch(None, True, False)
    return ProperWheelSearch(None, False, True)


def find_proper_wheel(g: Graph, holes=None, budget: Budget | int | None = None) -> Wheel | None:
    return proper_wheel_search(g, holes, budget).wheel


def proper_wheels(g: Graph, holes=None, budget: Budget | int | None = None) -> list[Wheel]:
    """Every proper wheel, in wheel order."""
    return [w for w in iter_wheels(g, holes, budget) if wheel_is_proper(g, w)]


def proper_wheel_centers(g: Graph, holes=None, budget: Budget | int | None = None) -> list[int]:
    return sorted({w.center for w in proper_wheels(g, holes, budget)})


def _spoke_key(w: Wheel):
    return (len(w.spokes), len(w.rim), w.rim)


def min_spoke_proper_wheel(
    g: Graph, center: int, holes=None, budget: Budget | int | None = None
) -> Wheel | None:
    """Proper wheel at ``center`` with fewest spokes, then shortest rim, then lex rim."""
    best = None
    for w in iter_wheels(g, holes, budget):
        if w.center == center and wheel_is_proper(g, w):
            if best is None or _spoke_key(w) < _spoke_key(best):
                best = w
    return best


def is_proper_wheel_center(g: Graph, v: int, holes=None, budget: Budget | int | None = None) -> bool:
    return any(w.center == v and wheel_is_proper(g, w) for w in iter_wheels(g, holes, budget))


# non-offensive vertices and almost proper wheels ---------------------------


def non_offensive_spokes(g: Graph, w: Wheel, x: int) -> list[int]:
    """Every spoke ``a`` such that ``x`` is ``a``-non-offensive for ``w``."""
    if x in w.rim or x == w.center:
        raise GraphError("vertex lies on the wheel")
    if not g.adjacent(x, w.center):
        return []
    rim_mask = w.rim_mask
    wmask = rim_mask | (1 << w.center)
    x_hit = g.masks[x] & rim_mask
    outside_nbrs = [u for u in g.neighbors(x) if not wmask >> u & 1]
    k = len(w.sectors)
    found = set()
    for i in range(k):
        s1, s2 = w.sectors[i], w.sectors[(i + 1) % k]
        m1, m2 = mask_of(s1), mask_of(s2)
        if not (x_hit & m1 and x_hit & m2):
            continue
        union = m1 | m2
        if x_hit & ~union:
            continue
        if any(g.masks[u] & rim_mask & ~union for u in outside_nbrs):
            continue
        shared = set(s1) & set(s2)
        if len(shared) == 1:
            found.add(shared.pop())
    return sorted(found)


def is_non_offensive(g: Graph, w: Wheel, x: int) -> int | None:
    """The shared spoke of the two consecutive sectors, or None."""
    spokes = non_offensive_spokes(g, w, x)
    return spokes[0] if spokes else None


def _consecutive(w: Wheel, a: int, b: int) -> bool:
    return any({s[0], s[-1]} == {a, b} for s in w.sectors)


def is_k_almost_proper(g: Graph, w: Wheel, marked: Sequence[int], X: Sequence[int]) -> bool:
    if not set(marked) <= set(w.spokes):
        raise GraphError("marked vertices must be spokes")
    wverts = set(w.rim) | {w.center}
    if set(X) & wverts:
        raise GraphError("X must avoid the wheel")
    if any(_consecutive(w, a, b) for a, b in itertools.combinations(marked, 2)):
        return False
    if not wheel_is_proper(g, w, mask_of(X)):
        return False
    mset = set(marked)
    return all(mset & set(non_offensive_spokes(g, w, x)) for x in X)


# structure of minimum-spoke proper wheels -----------------------------------


@dataclass
class WheelmainReport:
    ok: bool
    failures: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"ok": self.ok, "failures": self.failures}


def _require_min_spoke(g: Graph, w: Wheel, holes=None, budget=None) -> None:
    if not check_wheel(g, w):
        raise GraphError("not a valid wheel of this graph")
    if not wheel_is_proper(g, w):
        raise GraphError("wheel is not proper")
    best = min_spoke_proper_wheel(g, w.center, holes, budget)
    if len(best.spokes) != len(w.spokes):
        raise GraphError(
            f"wheel has {len(w.spokes)} spokes; a proper wheel at the same center has {len(best.spokes)}"
        )


def verify_wheelmain(g: Graph, w: Wheel, holes=None, budget: Budget | int | None = None) -> WheelmainReport:
    """Check how sector interiors spread over components around the center.

    (1) every component of ``G - N(x)`` holds at most one sector interior;
    (2) for ``u`` in ``N(x)``, the component of ``G - (N(x) - u)`` containing
    ``u`` holds at most two interiors, and two such sectors share a vertex.
    Sectors with empty interior are not counted.
    """
    _require_min_spoke(g, w, holes, budget)
    x = w.center
    nx = g.masks[x]
    interiors = [(i, mask_of(w.interior(i))) for i in range(len(w.sectors)) if len(w.sectors[i]) > 2]
    failures = []
    for comp in components(g, g.all_mask & ~nx):
        cm = mask_of(comp)
        inside = [i for i, m in interiors if m & ~cm == 0]
        if len(inside) > 1:
            failures.append({"part": 1, "component": comp, "sectors": inside})
    for u in members(nx):
        allowed = g.all_mask & ~(nx & ~(1 << u))
        comp = next(c for c in components(g, allowed) if u in c)
        cm = mask_of(comp)
        inside = [i for i, m in interiors if m & ~cm == 0]
        bad = len(inside) > 2 or any(
            not set(w.sectors[i]) & set(w.sectors[j]) for i, j in itertools.combinations(inside, 2)
        )
        if bad:
            failures.append({"part": 2, "vertex": u, "component": comp, "sectors": inside})
    return WheelmainReport(not failures, failures)


def _check_path(g: Graph, p: Sequence[int]) -> None:
    if not p or len(set(p)) != len(p):
        raise GraphError("path must be a non-empty sequence of distinct vertices")
    pm = mask_of(p)
    for i, v in enumerate(p):
        want = 0
        if i:
            want |= 1 << p[i - 1]
        if i + 1 < len(p):
            want |= 1 << p[i + 1]
        if g.masks[v] & pm != want:
            raise GraphError("sequence is not an induced path")


def verify_path_theorem(
    g: Graph, w: Wheel, p: Sequence[int], check_minimal: bool = True, holes=None, budget=None
) -> bool:
    """Check where edges from a path ``p`` outside the wheel may land on the rim.

    No center neighbor on ``p``: one sector covers all rim ends of edges
    from ``p``.  Exactly one: two intersecting sectors cover them.  When the
    path ends both see the rim, the interior does not, and no sector covers
    the ends' rim neighbors, each end not adjacent to the center must have a
    unique rim neighbor.
    """
    if check_minimal:
        _require_min_spoke(g, w, holes, budget)
    _check_path(g, p)
    wverts = set(w.rim) | {w.center}
    if set(p) & wverts:
        raise GraphError("path meets the wheel")
    centered = [v for v in p if g.adjacent(v, w.center)]
    if len(centered) > 1:
        raise GraphError("center has more than one neighbor on the path")
    rim_mask = w.rim_mask
    hits = 0
    for v in p:
        hits |= g.masks[v] & rim_mask
    sector_masks = [mask_of(s) for s in w.sectors]
    if not centered:
        ok = any(hits & ~m == 0 for m in sector_masks)
    else:
        ok = any(
            hits & ~(a | b) == 0 and a & b
            for a, b in itertools.combinations_with_replacement(sector_masks, 2)
        )
    if not ok:
        return False
    ends_hit = g.masks[p[0]] & rim_mask, g.masks[p[-1]] & rim_mask
    inner_hit = 0
    for v in p[1:-1]:
        inner_hit |= g.masks[v] & rim_mask
    if ends_hit[0] and ends_hit[1] and not inner_hit:
        union = ends_hit[0] | ends_hit[1]
        if not any(union & ~m == 0 for m in sector_masks):
            for end, hit in zip((p[0], p[-1]), ends_hit):
                if not g.adjacent(end, w.center) and bin(hit).count("1") != 1:
                    return False
    return True


def qualifying_paths(g: Graph, w: Wheel, max_vertices: int = 6, budget=None) -> Iterator[tuple[int, ...]]:
    """Induced paths avoiding ``w`` with at most one center neighbor."""
    wmask = w.rim_mask | (1 << w.center)
    cn = g.masks[w.center]
    for p in induced_paths(g, max_vertices, g.all_mask & ~wmask, budget):
        if bin(mask_of(p) & cn).count("1") <= 1:
            yield p
