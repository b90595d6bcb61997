"""
Exact Search
Desk-scale exact oracles: minimum monochromatic cover and partition, two-part
partitions, distinct-colour covers and exhaustive colouring enumeration
"""

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, Iterator, List, Optional, Set, Tuple

from pydantic import BaseModel, ConfigDict, Field

from ..graphs.components import (
    ComponentDecomposition, Method, MonoComponent, MonoCover, MonoPartition,
    decompose_all, reach_mask
)
from ..graphs.graph_core import (
    BLUE, RED, EdgeColouredGraph, SearchLimitError, VertexSet, iter_bits
)

__all__ = [
    'SearchLimits', 'SearchLimitError', 'ColouringMode', 'EnumerationStats',
    'min_mono_cover', 'min_mono_partition', 'exists_two_partition',
    'distinct_colour_cover', 'enumerate_colourings', 'enumerate_connected_sets',
]


class SearchLimits(BaseModel):
    """Size limits and node budgets for the exact routines"""
    model_config = ConfigDict(frozen=True)

    independence_n: int = Field(64, ge=1)
    cover_n: int = Field(24, ge=1)
    partition_n: int = Field(16, ge=1)
    two_partition_n: int = Field(16, ge=1)
    distinct_n: int = Field(64, ge=1)
    distinct_max_r: int = Field(3, ge=1)
    enumeration_budget: int = Field(20_000_000, ge=1)
    node_budget: int = Field(5_000_000, ge=1)


class _NodeBudget:
    def __init__(self, budget: int, routine: str):
        self.budget = budget
        self.routine = routine
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchLimitError(f"{self.routine} exceeded its node budget of {self.budget}")


def _check_size(g: EdgeColouredGraph, limit: int, routine: str) -> None:
    if g.n > limit:
        raise SearchLimitError(f"{routine} limited to n <= {limit}, got n={g.n}")


# ========== Minimum cover ==========

def min_mono_cover(g: EdgeColouredGraph,
                   limits: Optional[SearchLimits] = None) -> Tuple[int, MonoCover]:
    """
    Minimum number of maximal monochromatic components covering V, with a witness

    Iterative deepening set cover over the components of every colour;
    components contained in another candidate are dropped. With candidates
    ordered by (minimum vertex, colour, mask), the witness is the
    lexicographically least optimal cover in that order.
    """
    limits = limits or SearchLimits()
    _check_size(g, limits.cover_n, "min_mono_cover")
    parts = _minimum_cover(g, decompose_all(g), _NodeBudget(limits.node_budget, "min_mono_cover"))
    return len(parts), MonoCover(tuple(parts), Method.EXACT)


def _minimum_cover(g: EdgeColouredGraph, decomposition: ComponentDecomposition,
                   budget: _NodeBudget) -> List[MonoComponent]:
    unique: Dict[int, MonoComponent] = {}
    for component in decomposition.all_components():
        unique.setdefault(component.members.mask, component)

    masks = sorted(unique, key=lambda m: (-m.bit_count(), m))
    maximal = [m for m in masks if not any(m != other and m & ~other == 0 for other in masks)]
    candidates = sorted((unique[m] for m in maximal),
                        key=lambda p: (p.min_member, p.colour, p.members.mask))

    containing: List[List[int]] = [[] for _ in g.vertices()]
    for index, component in enumerate(candidates):
        for x in component.members:
            containing[x].append(index)
    largest = max(len(component) for component in candidates)
    failed: Dict[int, int] = {}
    dead: Set[Tuple[int, int, int]] = set()

    def search(uncovered: int, depth: int, chosen: List[int]) -> Optional[List[int]]:
        if not uncovered:
            return chosen
        if depth == 0 or uncovered.bit_count() > depth * largest:
            return None
        if failed.get(uncovered, 0) >= depth:
            return None
        budget.tick()

        pivot = min(iter_bits(uncovered), key=lambda v: (len(containing[v]), v))
        for index in containing[pivot]:
            found = search(uncovered & ~candidates[index].members.mask, depth - 1, chosen + [index])
            if found is not None:
                return found
        failed[uncovered] = depth
        return None

    def least(uncovered: int, depth: int, start: int) -> Optional[List[int]]:
        """First cover of uncovered by at most depth candidates at or after start, in index order"""
        if not uncovered:
            return []
        if depth == 0 or uncovered.bit_count() > depth * largest or (uncovered, depth, start) in dead:
            return None
        budget.tick()

        lowest = (uncovered & -uncovered).bit_length() - 1
        if containing[lowest][-1] < start:
            dead.add((uncovered, depth, start))
            return None
        for index in range(start, len(candidates)):
            # no later candidate can hold the lowest uncovered vertex
            if candidates[index].min_member > lowest:
                break
            members = candidates[index].members.mask
            if not members & uncovered:
                continue
            found = least(uncovered & ~members, depth - 1, index + 1)
            if found is not None:
                return [index] + found
        dead.add((uncovered, depth, start))
        return None

    upper = min(decomposition.counts())
    for depth in range(1, upper + 1):
        if search(g.full_mask, depth, []) is not None:
            chosen = least(g.full_mask, depth, 0)
            if chosen is not None:
                return [candidates[i] for i in chosen]
    # a full colour class always covers
    return list(decomposition.components(decomposition.counts().index(upper)))


# ========== Connected sets ==========

def _connected_masks(g: EdgeColouredGraph, c: int, seed: int, allowed: int) -> Iterator[int]:
    """
    Every c-connected subset of allowed containing seed, exactly once

    The frontier is consumed in increasing order; a frontier vertex passed
    over is excluded from the deeper branches, so no set repeats.
    """
    if not (allowed >> seed) & 1:
        return

    def extend(current: int, frontier: int, excluded: int) -> Iterator[int]:
        yield current
        remaining = frontier
        while remaining:
            bit = remaining & -remaining
            remaining ^= bit
            u = bit.bit_length() - 1
            grown = current | bit
            grown_frontier = (remaining | (g.colour_mask(u, c) & allowed)) & ~grown & ~excluded
            yield from extend(grown, grown_frontier, excluded)
            excluded |= bit

    start = 1 << seed
    yield from extend(start, g.colour_mask(seed, c) & allowed & ~start, 0)


def enumerate_connected_sets(g: EdgeColouredGraph, c: int, seed: int,
                             allowed: Optional[VertexSet] = None) -> Iterator[VertexSet]:
    """Yield each c-connected vertex set containing seed inside allowed (default V) once"""
    g.check_colour(c)
    g.check_vertex(seed)
    allowed_mask = g.full_mask if allowed is None else allowed.mask & g.full_mask
    for mask in _connected_masks(g, c, seed, allowed_mask):
        yield VertexSet(mask)


def _largest_part(g: EdgeColouredGraph, remaining: int) -> int:
    largest = 0
    for c in range(g.r):
        left = remaining
        while left:
            seed = left & -left
            members = reach_mask(g, c, seed, remaining)
            largest = max(largest, members.bit_count())
            left &= ~members
    return largest


# ========== Minimum partition ==========

Witness = Tuple[Tuple[int, ...], List[MonoComponent]]


def min_mono_partition(g: EdgeColouredGraph,
                       limits: Optional[SearchLimits] = None) -> Tuple[int, MonoPartition]:
    """
    Minimum number of parts in a partition of V into monochromatic connected sets

    The minimum cover gives a lower bound and the colour with fewest
    components an upper bound; from the lower bound up, the search places
    the lowest unassigned vertex into each candidate connected part in turn.
    Among optimal partitions the witness has the lexicographically least
    sorted list of part minimum vertices; ties keep the first in (next
    minimum, size descending, mask) order.
    """
    limits = limits or SearchLimits()
    _check_size(g, limits.partition_n, "min_mono_partition")
    budget = _NodeBudget(limits.node_budget, "min_mono_partition")
    decomposition = decompose_all(g)

    upper = min(decomposition.counts())
    lower = len(_minimum_cover(g, decomposition, budget))
    memo: Dict[Tuple[int, int], Witness] = {}
    failed: Dict[int, int] = {}

    def solve(remaining: int, k: int) -> Optional[Witness]:
        """Least-key partition of remaining into at most k parts"""
        if not remaining:
            return (), []
        if k == 0 or failed.get(remaining, 0) >= k:
            return None
        if (remaining, k) in memo:
            return memo[(remaining, k)]
        budget.tick()

        seed = (remaining & -remaining).bit_length() - 1
        best: Optional[Witness] = None
        if k == 1:
            for c in range(g.r):
                if reach_mask(g, c, 1 << seed, remaining) == remaining:
                    best = (seed,), [MonoComponent(c, VertexSet(remaining))]
                    break
        elif k * _largest_part(g, remaining) >= remaining.bit_count():
            options: Dict[int, int] = {}
            for c in range(g.r):
                for mask in _connected_masks(g, c, seed, remaining):
                    options.setdefault(mask, c)

            def next_minimum(mask: int) -> int:
                rest = remaining & ~mask
                return (rest & -rest).bit_length() - 1

            for mask in sorted(options, key=lambda m: (next_minimum(m), -m.bit_count(), m)):
                following = next_minimum(mask)
                if best is not None and (len(best[0]) == 1 or following > best[0][1]):
                    break
                rest = solve(remaining & ~mask, k - 1)
                if rest is None:
                    continue
                key = (seed,) + rest[0]
                if best is None or key < best[0]:
                    best = key, [MonoComponent(options[mask], VertexSet(mask))] + rest[1]

        if best is None:
            failed[remaining] = k
        else:
            memo[(remaining, k)] = best
        return best

    for k in range(lower, upper + 1):
        found = solve(g.full_mask, k)
        if found is not None:
            return len(found[1]), MonoPartition(tuple(found[1]), Method.EXACT)
    # the components of one colour always partition V
    parts = decomposition.components(decomposition.counts().index(upper))
    return upper, MonoPartition(tuple(parts), Method.EXACT)


def exists_two_partition(g: EdgeColouredGraph,
                         limits: Optional[SearchLimits] = None) -> Optional[MonoPartition]:
    """
    A partition of V into two monochromatic connected parts, or None

    Colour combinations red/red, blue/blue and red/blue are all admissible.
    A single vertex has no two-part partition.
    """
    g.require_colours(2, "exists_two_partition")
    limits = limits or SearchLimits()
    _check_size(g, limits.two_partition_n, "exists_two_partition")
    if g.n == 1:
        return None

    decomposition = decompose_all(g)
    for c in (RED, BLUE):
        if decomposition.count(c) == 2:
            return MonoPartition(decomposition.components(c), Method.EXACT)

    for c in (RED, BLUE):
        if decomposition.count(c) == 1:
            return split_spanning_colour(g, c)

    budget = _NodeBudget(limits.node_budget, "exists_two_partition")
    seen = set()
    for c in (RED, BLUE):
        for mask in _connected_masks(g, c, 0, g.full_mask):
            if mask in seen or mask == g.full_mask:
                continue
            seen.add(mask)
            budget.tick()
            rest = g.full_mask & ~mask
            seed = rest & -rest
            for other in (RED, BLUE):
                if reach_mask(g, other, seed, rest) == rest:
                    return MonoPartition(
                        (MonoComponent(c, VertexSet(mask)), MonoComponent(other, VertexSet(rest))),
                        Method.EXACT,
                    )
    return None


def split_spanning_colour(g: EdgeColouredGraph, c: int) -> Optional[MonoPartition]:
    """
    Two-part partition from a colour that connects V: the lowest vertex whose
    removal keeps the colour connected, then the rest
    """
    for v in g.vertices():
        rest = g.full_mask & ~(1 << v)
        if rest and reach_mask(g, c, rest & -rest, rest) == rest:
            return MonoPartition(
                (MonoComponent(RED, VertexSet(1 << v)), MonoComponent(c, VertexSet(rest))),
                Method.EXACT,
            )
    return None


# ========== Distinct-colour cover ==========

def distinct_colour_cover(g: EdgeColouredGraph,
                          limits: Optional[SearchLimits] = None) -> Optional[MonoCover]:
    """
    A cover of V using at most one maximal component per colour, or None

    Any such cover contains C_c(v) for the lowest uncovered vertex v and some
    unused colour c, so branching on those choices is exhaustive.
    """
    limits = limits or SearchLimits()
    if g.r > limits.distinct_max_r:
        raise SearchLimitError(
            f"distinct_colour_cover exhaustive mode supports r <= {limits.distinct_max_r}, got r={g.r}"
        )
    _check_size(g, limits.distinct_n, "distinct_colour_cover")
    decomposition = decompose_all(g)

    def search(uncovered: int, used: int) -> Optional[List[MonoComponent]]:
        if not uncovered:
            return []
        v = (uncovered & -uncovered).bit_length() - 1
        for c in range(g.r):
            if used >> c & 1:
                continue
            component = decomposition.component_of(c, v)
            rest = search(uncovered & ~component.members.mask, used | (1 << c))
            if rest is not None:
                return [component] + rest
        return None

    parts = search(g.full_mask, 0)
    if parts is None:
        return None
    return MonoCover(tuple(parts), Method.EXACT)


# ========== Exhaustive colouring enumeration ==========

class ColouringMode(Enum):
    COMPLETE = "complete-graph"
    WITH_NON_EDGES = "with-non-edges"


@dataclass
class EnumerationStats:
    """Counts from one exhaustive colouring sweep"""
    states: int
    visited: int = 0
    passed: int = 0
    failed: int = 0
    failures: List[EdgeColouredGraph] = field(default_factory=list)

    def to_dict(self) -> Dict:
        return {
            'states': self.states,
            'visited': self.visited,
            'passed': self.passed,
            'failed': self.failed,
        }


def enumerate_colourings(n: int, r: int, mode: ColouringMode, min_degree: int,
                         visitor: Callable[[EdgeColouredGraph], bool],
                         limits: Optional[SearchLimits] = None,
                         serial: bool = True, workers: int = 1,
                         keep_failures: int = 10) -> EnumerationStats:
    """
    Call visitor on every coloured graph on n vertices with delta >= min_degree

    Edge states run in mixed-radix order: presence patterns outermost (only
    all-present in complete-graph mode), then colour vectors of the present
    edges. The visitor returns True for a pass. A visitor that is safe to
    call concurrently may be fanned out to a thread pool with serial=False.
    """
    limits = limits or SearchLimits()
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    radix = r if mode is ColouringMode.COMPLETE else r + 1
    states = radix ** len(pairs)
    if states > limits.enumeration_budget:
        raise SearchLimitError(
            f"{states} colouring states exceed the enumeration budget of {limits.enumeration_budget}"
        )

    stats = EnumerationStats(states=states)
    full_presence = (1 << len(pairs)) - 1
    presences = [full_presence] if mode is ColouringMode.COMPLETE else range(full_presence + 1)
    pool = ThreadPoolExecutor(max_workers=workers) if not serial and workers > 1 else None

    try:
        for presence in presences:
            present = [pair for bit, pair in enumerate(pairs) if presence >> bit & 1]
            degree = [0] * n
            for u, v in present:
                degree[u] += 1
                degree[v] += 1
            if n and min(degree) < min_degree:
                continue

            graphs = (
                EdgeColouredGraph(n, r, dict(zip(present, colours)))
                for colours in itertools.product(range(r), repeat=len(present))
            )
            if pool:
                batch = list(graphs)
                outcomes = zip(batch, pool.map(visitor, batch))
            else:
                outcomes = ((graph, visitor(graph)) for graph in graphs)
            for graph, verdict in outcomes:
                stats.visited += 1
                if verdict:
                    stats.passed += 1
                else:
                    stats.failed += 1
                    if len(stats.failures) < keep_failures:
                        stats.failures.append(graph)
    finally:
        if pool:
            pool.shutdown()

    return stats
