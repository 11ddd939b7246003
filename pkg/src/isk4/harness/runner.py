"""Run a theorem suite over a corpus and aggregate a deterministic report."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from ..formats import emit_graph6, parse_graph6
from ..recognizers import DEFAULT_EXACT_BOUND
from ..search import DEFAULT_BUDGET, SearchBudgetExceeded
from .corpus import CorpusSpec, apply_filters, parse_corpus
from .suites import FAIL, INCONCLUSIVE, PASS, SKIP, SUITES, Analysis

__all__ = ["SuiteReport", "UnknownSuite", "run_suite", "run_instance"]

FILTERED = "filtered"


class UnknownSuite(KeyError):
    pass


@dataclass
class SuiteReport:
    suite: str
    corpus: str
    exact_bound: int
    budget: int | None
    instances: int = 0
    filtered_out: int = 0
    skipped: int = 0
    passed: int = 0
    failed: int = 0
    inconclusive: int = 0
    checks: int = 0
    failures: list[dict] = field(default_factory=list)
    inconclusive_instances: list[dict] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def applicable(self) -> int:
        return self.passed + self.failed + self.inconclusive

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.inconclusive == 0

    def to_dict(self, include_timing: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "corpus": self.corpus,
            "exact_bound": self.exact_bound,
            "budget": self.budget,
            "instances": self.instances,
            "filtered_out": self.filtered_out,
            "applicable": self.applicable,
            "skipped": self.skipped,
            "passed": self.passed,
            "failed": self.failed,
            "inconclusive": self.inconclusive,
            "checks": self.checks,
            "failures": self.failures,
            "inconclusive_instances": self.inconclusive_instances,
        }
        if include_timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_dict(include_timing), sort_keys=True, indent=2)

    def summary(self) -> str:
        verdict = "OK" if self.ok else "FAILED"
        return (
            f"{self.suite:<20} {verdict:<7} instances={self.instances} applicable={self.applicable} "
            f"passed={self.passed} failed={self.failed} inconclusive={self.inconclusive} "
            f"skipped={self.skipped} filtered={self.filtered_out} checks={self.checks} "
            f"time={self.wall_time:.2f}s"
        )


def run_instance(args: tuple) -> tuple[str, int, dict | None]:
    """Worker entry point: ``(suite, graph6, filters, exact_bound, budget)``."""
    suite, text, filters, exact_bound, budget = args
    g = parse_graph6(text)
    a = Analysis(g, exact_bound, budget)
    try:
        if not apply_filters(g, filters, exact_bound, a.budget):
            return FILTERED, 0, None
        result = SUITES[suite](a)
    except SearchBudgetExceeded:
        return INCONCLUSIVE, 0, None
    return result.status, result.checks, result.certificate


def run_suite(
    suite: str,
    corpus: CorpusSpec | str,
    exact_bound: int = DEFAULT_EXACT_BOUND,
    budget: int | None = DEFAULT_BUDGET,
    jobs: int = 1,
    progress: Callable[[int], None] | None = None,
) -> SuiteReport:
    """Run ``suite`` on every corpus graph; results aggregate in corpus order."""
    if suite not in SUITES:
        raise UnknownSuite(f"unknown suite {suite!r}; choose from {', '.join(sorted(SUITES))}")
    spec = parse_corpus(corpus) if isinstance(corpus, str) else corpus
    start = time.perf_counter()
    texts = [emit_graph6(g) for g in spec.graphs()]
    tasks = [(suite, t, spec.filters, exact_bound, budget) for t in texts]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_instance, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        results = []
        for i, task in enumerate(tasks):
            results.append(run_instance(task))
            if progress is not None:
                progress(i + 1)
    report = SuiteReport(suite, spec.text or str(corpus), exact_bound, budget, instances=len(texts))
    for index, (text, (status, checks, cert)) in enumerate(zip(texts, results)):
        report.checks += checks
        if status == FILTERED:
            report.filtered_out += 1
        elif status == SKIP:
            report.skipped += 1
        elif status == PASS:
            report.passed += 1
        elif status == FAIL:
            report.failed += 1
            report.failures.append({"index": index, "graph6": text, "certificate": cert})
        else:
            report.inconclusive += 1
            report.inconclusive_instances.append({"index": index, "graph6": text})
    report.wall_time = time.perf_counter() - start
    return report
