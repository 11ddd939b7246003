"""Corpus descriptions and their expansion into graphs.

A corpus is written as ``SOURCE[@FILTER,FILTER...]`` where SOURCE is one of

* ``internal:N`` -- every graph on at most ``N <= 7`` vertices, up to isomorphism;
* ``g6:PATH`` -- a graph6 file, one graph per line;
* ``gen:KIND:COUNT:SEED[:key=value,...]`` -- seeded generator output, with
  KIND one of ``gnp`` (``n``, ``p``), ``sp`` (``nmin``, ``nmax``),
  ``wheel`` (``max_spokes``, ``max_interior``), ``inclass`` (``extra``),
  ``almost`` (wheels spoiled by non-offensive vertices) or ``k33glued``.

Filters are ``connected``, ``triangle-free``, ``isk4-free``, ``inclass``
(triangle-free and ISK4-free) and ``k33-free``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

from ..formats import parse_graph6_lines
from ..graph import Graph, is_connected_mask
from ..recognizers import find_isk4, find_k33_subgraph, find_triangle
from ..search import Budget
from .enumerate import enumerate_all_graphs
from .generators import (
    cycle_graph,
    gen_gnp,
    gen_inclass_extension,
    gen_k33_glued,
    gen_non_offensive,
    gen_series_parallel,
    gen_wheel,
    rng_for,
)

__all__ = ["CorpusSpec", "CorpusError", "FILTERS", "parse_corpus", "apply_filters"]

FILTERS = ("connected", "triangle-free", "isk4-free", "inclass", "k33-free")
GEN_KINDS = ("gnp", "sp", "wheel", "inclass", "almost", "k33glued")


class CorpusError(ValueError):
    pass


@dataclass(frozen=True)
class CorpusSpec:
    source: str
    max_order: int | None = None
    path: str | None = None
    kind: str | None = None
    count: int = 0
    seed: int = 0
    params: tuple[tuple[str, str], ...] = ()
    filters: tuple[str, ...] = ()
    text: str = field(default="", compare=False)

    def param(self, key: str, default, cast=int):
        for k, v in self.params:
            if k == key:
                return cast(v)
        return default

    def graphs(self) -> Iterator[Graph]:
        """Unfiltered corpus graphs in their fixed order."""
        if self.source == "internal":
            yield from enumerate_all_graphs(self.max_order)
        elif self.source == "g6":
            yield from parse_graph6_lines(Path(self.path).read_text())
        else:
            for i in range(self.count):
                yield self._generate(i)

    def _generate(self, i: int) -> Graph:
        kind, seed = self.kind, self.seed
        if kind == "gnp":
            return gen_gnp(self.param("n", 12), self.param("p", 0.25, float), seed, i)
        if kind == "sp":
            lo, hi = self.param("nmin", 4), self.param("nmax", 40)
            n = int(rng_for(seed, i).integers(lo, hi + 1))
            return gen_series_parallel(n, seed, i)
        if kind in ("wheel", "inclass"):
            rng = rng_for(seed, i)
            spokes = int(rng.integers(4, self.param("max_spokes", 5) + 1))
            interiors = [int(x) for x in rng.integers(1, self.param("max_interior", 2) + 1, size=spokes)]
            w = gen_wheel(spokes, interiors)
            if kind == "wheel":
                return w
            return gen_inclass_extension(w, self.param("extra", 4), seed, i)
        if kind == "almost":
            rng = rng_for(seed, i)
            spokes = int(rng.integers(4, self.param("max_spokes", 6) + 1))
            options = [m for r in (1, 2) for m in itertools.combinations(range(spokes), r)
                       if r == 1 or (m[1] - m[0]) % spokes not in (1, spokes - 1)]
            marked = options[int(rng.integers(len(options)))]
            return gen_non_offensive(spokes, 5, marked)
        if kind == "k33glued":
            return gen_k33_glued(cycle_graph(5 + i % 3))
        raise CorpusError(f"unknown generator {kind!r}")


def parse_corpus(text: str) -> CorpusSpec:
    source, _, filt = text.partition("@")
    filters = tuple(f for f in filt.split(",") if f) if filt else ()
    for f in filters:
        if f not in FILTERS:
            raise CorpusError(f"unknown filter {f!r}; choose from {', '.join(FILTERS)}")
    head, _, rest = source.partition(":")
    if head == "internal":
        try:
            n = int(rest)
        except ValueError:
            raise CorpusError("internal corpus needs an order, e.g. internal:7") from None
        if not 0 <= n <= 7:
            raise CorpusError("internal enumeration supports orders 0..7")
        return CorpusSpec("internal", max_order=n, filters=filters, text=text)
    if head == "g6":
        if not rest:
            raise CorpusError("g6 corpus needs a path")
        return CorpusSpec("g6", path=rest, filters=filters, text=text)
    if head == "gen":
        parts = rest.split(":")
        if len(parts) not in (3, 4):
            raise CorpusError("generator corpus is gen:KIND:COUNT:SEED[:key=value,...]")
        kind = parts[0]
        if kind not in GEN_KINDS:
            raise CorpusError(f"unknown generator {kind!r}; choose from {', '.join(GEN_KINDS)}")
        try:
            count, seed = int(parts[1]), int(parts[2])
        except ValueError:
            raise CorpusError("COUNT and SEED must be integers") from None
        params = []
        if len(parts) == 4 and parts[3]:
            for item in parts[3].split(","):
                k, eq, v = item.partition("=")
                if not eq:
                    raise CorpusError(f"bad generator parameter {item!r}")
                params.append((k, v))
        return CorpusSpec("gen", kind=kind, count=count, seed=seed, params=tuple(params), filters=filters, text=text)
    raise CorpusError(f"unknown corpus source {head!r}")


def apply_filters(g: Graph, filters, exact_bound: int, budget: Budget | None = None) -> bool:
    """True if ``g`` passes every filter; may raise ``SearchBudgetExceeded``."""
    for f in filters:
        if f == "connected" and (g.order == 0 or not is_connected_mask(g, g.all_mask)):
            return False
        if f in ("triangle-free", "inclass") and find_triangle(g) is not None:
            return False
        if f in ("isk4-free", "inclass") and find_isk4(g, exact_bound, budget) is not None:
            return False
        if f == "k33-free" and find_k33_subgraph(g) is not None:
            return False
    return True
