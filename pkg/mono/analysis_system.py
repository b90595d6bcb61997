"""
Monochromatic Analysis System
Runs covers, partitions and distinct-colour covers on a graph, verifies every
certificate and keeps a per-graph record
"""

import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Union

import pandas as pd

from .config import Settings
from .graphs.components import MonoCover, MonoPartition, decompose_all
from .graphs.graph_core import EdgeColouredGraph, GraphError, GraphStats, SearchLimitError, graph_stats
from .harness.verifier import CertificateVerifier, CheckResult
from .solvers.exact_search import distinct_colour_cover, min_mono_cover, min_mono_partition
from .solvers.koenig_cover import cover_two_coloured
from .solvers.proof_guided import (
    PreconditionError, heuristic_two_partition, three_colour_distinct_cover, two_colour_distinct_cover
)

COVER_METHODS = ("koenig", "exact")
PARTITION_METHODS = ("exact", "heuristic")
DISTINCT_METHODS = ("exact", "constructive")


@dataclass
class AnalysisResult:
    """Everything computed for one graph"""
    name: str
    stats: GraphStats
    component_counts: List[int]
    cover: Optional[MonoCover] = None
    partition: Optional[MonoPartition] = None
    distinct_cover: Optional[MonoCover] = None
    checks: Dict[str, CheckResult] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)
    execution_time: float = 0.0

    @property
    def all_valid(self) -> bool:
        return all(check.is_valid for check in self.checks.values())

    def to_dict(self) -> Dict:
        return {
            'name': self.name,
            'stats': self.stats.to_dict(),
            'component_counts': self.component_counts,
            'cover': self.cover.to_dict() if self.cover else None,
            'partition': self.partition.to_dict() if self.partition else None,
            'distinct_cover': self.distinct_cover.to_dict() if self.distinct_cover else None,
            'checks': {name: check.to_dict() for name, check in self.checks.items()},
            'notes': self.notes,
            'execution_time': self.execution_time,
        }

    def to_row(self) -> Dict:
        return {
            'name': self.name,
            'n': self.stats.n,
            'r': self.stats.r,
            'min_degree': self.stats.min_degree,
            'alpha': self.stats.independence_number,
            'components': "/".join(str(count) for count in self.component_counts),
            'cover': self.cover.size if self.cover else None,
            'partition': self.partition.size if self.partition else None,
            'distinct_cover': self.distinct_cover.size if self.distinct_cover else None,
            'valid': self.all_valid,
            'seconds': round(self.execution_time, 3),
        }

    def get_summary(self) -> str:
        """Get human-readable summary"""
        summary = "\n" + "=" * 70 + "\n"
        summary += f"ANALYSIS: {self.name}\n"
        summary += "=" * 70 + "\n\n"
        alpha = self.stats.independence_number
        summary += f"n = {self.stats.n}, r = {self.stats.r}, delta = {self.stats.min_degree}, "
        summary += f"alpha = {alpha if alpha is not None else 'beyond limit'}\n"
        summary += f"Components per colour: {self.component_counts}\n\n"
        for label, certificate in (("Cover", self.cover), ("Partition", self.partition),
                                   ("Distinct-colour cover", self.distinct_cover)):
            if certificate is None:
                continue
            summary += f"{label} ({certificate.method.value}, {certificate.size} parts):\n"
            for part in certificate.parts:
                summary += f"  - {part.describe()}\n"
        for note in self.notes:
            summary += f"⚠️  {note}\n"
        for name, check in self.checks.items():
            summary += f"{name}: {check.get_verification_report()}\n"
        summary += f"Time: {self.execution_time:.2f}s\n"
        return summary


class MonoAnalysisSystem:
    """
    Orchestrates the solvers over one graph or a batch

    Each certificate produced is handed to the independent verifier before
    it is recorded.
    """

    def __init__(self, settings: Optional[Settings] = None, verbose: bool = True):
        self.settings = settings or Settings()
        self.limits = self.settings.search_limits()
        self.verifier = CertificateVerifier()
        self.verbose = verbose

        self.results: Dict[str, AnalysisResult] = {}

    # ========== Single operations ==========

    def cover(self, g: EdgeColouredGraph, method: str = "koenig") -> MonoCover:
        if method == "koenig":
            return cover_two_coloured(g)
        if method == "exact":
            return min_mono_cover(g, self.limits)[1]
        raise GraphError(f"unknown cover method '{method}' (choose from {', '.join(COVER_METHODS)})")

    def partition(self, g: EdgeColouredGraph, method: str = "exact", seed: Optional[int] = None,
                  budget: Optional[int] = None) -> Optional[MonoPartition]:
        if method == "exact":
            return min_mono_partition(g, self.limits)[1]
        if method == "heuristic":
            cfg = self.settings.heuristic_config(seed)
            if budget is not None:
                cfg = cfg.model_copy(update={'star_retries': budget, 'split_retries': budget})
            return heuristic_two_partition(g, cfg, self.limits)
        raise GraphError(f"unknown partition method '{method}' (choose from {', '.join(PARTITION_METHODS)})")

    def distinct_cover(self, g: EdgeColouredGraph, method: str = "exact") -> Optional[MonoCover]:
        if method == "exact":
            return distinct_colour_cover(g, self.limits)
        if method == "constructive":
            if g.r == 2:
                return two_colour_distinct_cover(g)
            if g.r == 3:
                return three_colour_distinct_cover(g)
            raise PreconditionError(f"constructive distinct-colour cover needs r in {{2, 3}}, got r={g.r}")
        raise GraphError(f"unknown distinct-cover method '{method}' (choose from {', '.join(DISTINCT_METHODS)})")

    # ========== Full analysis ==========

    def analyze(self, g: EdgeColouredGraph, name: Optional[str] = None) -> AnalysisResult:
        """
        Statistics, component counts, a minimum cover, a minimum partition and
        a distinct-colour cover, each as far as the configured limits allow

        Args:
            g: The graph
            name: Label used in reports (defaults to a repr of g)

        Returns:
            AnalysisResult with verified certificates and notes on skipped steps
        """
        start_time = time.time()
        name = name or repr(g)

        if self.verbose:
            print(f"\n{'='*70}")
            print(f"📊 ANALYZING {name}")
            print(f"{'='*70}")

        stats = graph_stats(g, self.limits.independence_n)
        result = AnalysisResult(name=name, stats=stats, component_counts=decompose_all(g).counts())

        if self.verbose:
            print(f"   n={stats.n}, r={stats.r}, delta={stats.min_degree}, alpha={stats.independence_number}")
            print(f"   Components per colour: {result.component_counts}")

        # Step 1: cover
        if self.verbose:
            print("\n🔎 Step 1: Minimum cover...")
        result.cover = self._attempt(result, "cover", lambda: self.cover(g, "exact"))
        if result.cover is None and g.r == 2:
            result.cover = cover_two_coloured(g)
            result.notes.append("exact cover skipped; Koenig cover reported instead")
        if result.cover is not None:
            result.checks['cover'] = self.verifier.check_cover(g, result.cover)

        # Step 2: partition
        if self.verbose:
            print("\n🧩 Step 2: Minimum partition...")
        result.partition = self._attempt(result, "partition", lambda: self.partition(g, "exact"))
        if result.partition is None and g.r == 2:
            result.partition = self._attempt(result, "heuristic partition", lambda: self.partition(g, "heuristic"))
        if result.partition is not None:
            result.checks['partition'] = self.verifier.check_partition(g, result.partition)

        # Step 3: distinct-colour cover
        if self.verbose:
            print("\n🎨 Step 3: Distinct-colour cover...")
        result.distinct_cover = self._attempt(result, "distinct-colour cover", lambda: self.distinct_cover(g, "exact"))
        if result.distinct_cover is not None:
            result.checks['distinct_cover'] = self.verifier.check_cover(g, result.distinct_cover, distinct=True)
        elif not any("distinct-colour cover" in note for note in result.notes):
            result.notes.append("no distinct-colour cover exists")

        result.execution_time = time.time() - start_time

        if self.verbose:
            marker = "✅" if result.all_valid else "❌"
            print(f"\n{marker} ANALYSIS COMPLETE")
            if result.cover:
                print(f"   Cover: {result.cover.size} parts")
            if result.partition:
                print(f"   Partition: {result.partition.size} parts")
            print(f"   Time: {result.execution_time:.2f}s")
            print(f"{'='*70}\n")

        self.results[name] = result
        return result

    def _attempt(self, result: AnalysisResult, label: str, step):
        try:
            return step()
        except (SearchLimitError, PreconditionError) as e:
            result.notes.append(f"{label} skipped: {e}")
            if self.verbose:
                print(f"   ⚠️  {label} skipped: {e}")
            return None

    def analyze_batch(self, graphs: Dict[str, EdgeColouredGraph]) -> List[AnalysisResult]:
        results = []
        for i, (name, g) in enumerate(graphs.items(), 1):
            if self.verbose:
                print(f"\n{'='*70}")
                print(f"Graph {i}/{len(graphs)}")
                print(f"{'='*70}")
            results.append(self.analyze(g, name))
        return results

    def get_statistics(self) -> Dict:
        """Get statistics about analyzed graphs"""
        if not self.results:
            return {}

        results = list(self.results.values())
        return {
            'total_graphs': len(results),
            'all_valid': sum(1 for r in results if r.all_valid),
            'with_distinct_cover': sum(1 for r in results if r.distinct_cover is not None),
            'average_execution_time': sum(r.execution_time for r in results) / len(results),
        }

    def results_frame(self) -> pd.DataFrame:
        return pd.DataFrame([result.to_row() for result in self.results.values()])

    def export_results(self, filepath: Union[str, Path]) -> None:
        """Export the per-graph table as CSV"""
        self.results_frame().to_csv(filepath, index=False)
        if self.verbose:
            print(f"✅ Exported analysis table to: {filepath}")


def create_analysis_system(verbose: bool = True, settings: Optional[Settings] = None) -> MonoAnalysisSystem:
    """Factory function to create an analysis system"""
    return MonoAnalysisSystem(settings=settings, verbose=verbose)
