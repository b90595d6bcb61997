"""
Certificate Verifier
Re-checks covers, partitions and heuristic working sets against the graph
alone, independently of the routine that produced them
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional

from ..graphs.components import MonoCover, MonoPartition, is_mono_connected
from ..graphs.graph_core import EdgeColouredGraph, VertexSet, colour_neighbourhood


@dataclass
class CheckResult:
    """Outcome of one certificate check"""
    is_valid: bool
    issues: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict:
        return {'is_valid': self.is_valid, 'issues': self.issues}

    def get_verification_report(self) -> str:
        if self.is_valid:
            return "✅ certificate valid"
        return "❌ certificate invalid\n" + "\n".join(f"  - {issue}" for issue in self.issues)


class CertificateVerifier:
    """
    Validates monochromatic covers and partitions

    Every check recomputes connectivity from the graph's own edges; nothing
    recorded by the producing routine is trusted.
    """

    def _check_parts(self, g: EdgeColouredGraph, parts, issues: List[str]) -> int:
        union = 0
        for index, part in enumerate(parts):
            if not 0 <= part.colour < g.r:
                issues.append(f"part {index} has colour {part.colour} outside 0..{g.r - 1}")
                continue
            if not part.members:
                issues.append(f"part {index} is empty")
                continue
            if part.members.mask & ~g.full_mask:
                issues.append(f"part {index} has vertices outside 0..{g.n - 1}")
                continue
            if not is_mono_connected(g, part.colour, part.members):
                issues.append(f"part {index} ({part.describe()}) is not connected in its colour")
            union |= part.members.mask
        return union

    def check_cover(self, g: EdgeColouredGraph, cover: MonoCover,
                    max_parts: Optional[int] = None, distinct: bool = False) -> CheckResult:
        """Parts connected in their colours and union V; optional size and distinct-colour bounds"""
        issues: List[str] = []
        union = self._check_parts(g, cover.parts, issues)
        missing = VertexSet(g.full_mask & ~union)
        if missing:
            issues.append(f"vertices {missing.to_list()} are not covered")
        if max_parts is not None and cover.size > max_parts:
            issues.append(f"cover has {cover.size} parts, more than {max_parts}")
        if distinct and not cover.has_distinct_colours():
            issues.append(f"cover repeats a colour: {cover.colours}")
        return CheckResult(not issues, issues)

    def check_partition(self, g: EdgeColouredGraph, partition: MonoPartition,
                        max_parts: Optional[int] = None) -> CheckResult:
        """Parts connected in their colours, pairwise disjoint, union V"""
        issues: List[str] = []
        seen = 0
        for index, part in enumerate(partition.parts):
            if seen & part.members.mask:
                issues.append(f"part {index} overlaps an earlier part")
            seen |= part.members.mask
        union = self._check_parts(g, partition.parts, issues)
        missing = VertexSet(g.full_mask & ~union)
        if missing:
            issues.append(f"vertices {missing.to_list()} are not in any part")
        if max_parts is not None and partition.size > max_parts:
            issues.append(f"partition has {partition.size} parts, more than {max_parts}")
        return CheckResult(not issues, issues)

    def check_dominating_star(self, g: EdgeColouredGraph, component_members: VertexSet,
                              star: VertexSet, star_colour: int, cap: int) -> CheckResult:
        """|U| <= cap, U connected in star_colour, component inside U or its neighbourhood"""
        issues: List[str] = []
        if len(star) > cap:
            issues.append(f"star has {len(star)} vertices, more than {cap}")
        if not is_mono_connected(g, star_colour, star):
            issues.append("star is not connected in its colour")
        reached = star | colour_neighbourhood(g, star, star_colour)
        if not component_members.issubset(reached):
            issues.append(f"vertices {(component_members - reached).to_list()} are not dominated")
        return CheckResult(not issues, issues)

    def check_closure_maximal(self, g: EdgeColouredGraph, star: VertexSet, closure: VertexSet,
                              star_colour: int, threshold: int) -> CheckResult:
        """No vertex outside U and the closure has threshold star-colour neighbours in the closure"""
        issues = [
            f"vertex {x} has {(g.colour_mask(x, star_colour) & closure.mask).bit_count()} "
            f"neighbours in the closure (threshold {threshold})"
            for x in VertexSet(g.full_mask & ~(star.mask | closure.mask))
            if (g.colour_mask(x, star_colour) & closure.mask).bit_count() >= threshold
        ]
        return CheckResult(not issues, issues)
