"""
Proof-Guided Algorithms
Randomised two-part partition heuristic (smallest component, dominating star,
closure, random split), the constructive distinct-colour covers for two and
three colours, the large-component finder and the claim predicate probes
"""

import math
from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from sympy import Rational, ceiling

from ..graphs.components import (
    Method, MonoComponent, MonoCover, MonoPartition,
    component_of, decompose, decompose_all, is_mono_connected, reach_mask
)
from ..graphs.graph_core import (
    BLUE, RED, EdgeColouredGraph, GraphError, VertexSet, colour_neighbourhood,
    iter_bits, min_degree
)
from .exact_search import SearchLimits, distinct_colour_cover, exists_two_partition, split_spanning_colour


class PreconditionError(GraphError):
    """Raised when a graph does not meet the hypothesis an operation relies on"""
    pass


CLAIM_IDS = ("claim-2-1", "claim-3-1", "claim-3-2", "claim-3-3", "claim-3-4", "claim-3-5")
ASYMPTOTIC = "asymptotic-statement"


class HeuristicConfig(BaseModel):
    """Seed, constants and retry budgets of the randomised partition pipeline"""
    model_config = ConfigDict(frozen=True)

    seed: int = 0
    log_base: float = Field(math.e, gt=1.0)
    sample_coefficient: float = Field(13.0, gt=0.0)
    star_cap_coefficient: float = Field(27.0, gt=0.0)
    closure_coefficient: float = Field(1.0, gt=0.0)
    star_retries: int = Field(64, ge=1)
    split_retries: int = Field(64, ge=1)
    fallback_n: int = Field(16, ge=0)

    def log(self, n: int) -> float:
        return math.log(n, self.log_base) if n > 1 else 0.0

    def star_cap(self, n: int) -> int:
        return max(1, math.ceil(self.star_cap_coefficient * self.log(n)))

    def sample_probability(self, n: int) -> float:
        return min(1.0, self.sample_coefficient * self.log(n) / n)

    def closure_threshold(self, n: int) -> int:
        return max(1, math.ceil(self.closure_coefficient * self.log(n)))


@dataclass(frozen=True)
class SplitState:
    """
    Working sets of the partition pipeline

    star is the dominating set U (connected in star_colour), neighbours its
    star-colour neighbourhood N, closure extends N by the appended vertices
    and remainder is W = V minus (U and closure). pivot and candidates are
    the w and X the random split samples from.
    """
    star_colour: int
    component_colour: int
    star: VertexSet
    neighbours: VertexSet
    closure: VertexSet
    remainder: VertexSet
    appended: Tuple[int, ...] = ()
    pivot: Optional[int] = None
    candidates: VertexSet = field(default_factory=VertexSet)


def _rng(cfg: HeuristicConfig, rng: Optional[np.random.Generator]) -> np.random.Generator:
    return rng if rng is not None else np.random.default_rng(cfg.seed)


def _sample(members: List[int], probability: float, rng: np.random.Generator) -> int:
    if not members:
        return 0
    draws = rng.random(len(members)) < probability
    mask = 0
    for x, taken in zip(members, draws):
        if taken:
            mask |= 1 << x
    return mask


# ========== Two-part partition pipeline ==========

def smallest_component(g: EdgeColouredGraph, c: int) -> MonoComponent:
    """A minimum-order c-component; ties go to the least minimum vertex"""
    return min(decompose(g, c), key=lambda component: (len(component), component.min_member))


def build_dominating_star(g: EdgeColouredGraph, component: MonoComponent,
                          cfg: Optional[HeuristicConfig] = None,
                          rng: Optional[np.random.Generator] = None) -> Optional[SplitState]:
    """
    Small star-colour connected U whose neighbourhood dominates the component

    U is u = min(component) plus a random subset of u's star-colour
    neighbours outside the component, each kept with probability
    min(1, 13 log n / n). A draw is accepted when |U| stays within
    27 log n and every vertex of the component is in U or adjacent to it.
    Returns None once the retry budget is spent.
    """
    g.require_colours(2, "build_dominating_star")
    cfg = cfg or HeuristicConfig()
    rng = _rng(cfg, rng)
    colour = component.colour
    star_colour = 1 - colour
    if not is_mono_connected(g, colour, component.members):
        raise PreconditionError(f"{component.describe()} is not connected in its colour")

    u = component.min_member
    target = component.members.mask
    cap = cfg.star_cap(g.n)

    if len(component) == 1:
        star = 1 << u
    else:
        outside = list(iter_bits(g.colour_mask(u, star_colour) & ~target))
        probability = cfg.sample_probability(g.n)
        star = None
        for _ in range(cfg.star_retries):
            attempt = _sample(outside, probability, rng) | (1 << u)
            if attempt.bit_count() > cap:
                continue
            reached = attempt | colour_neighbourhood(g, VertexSet(attempt), star_colour).mask
            if target & ~reached == 0:
                star = attempt
                break
        if star is None:
            return None

    neighbours = colour_neighbourhood(g, VertexSet(star), star_colour)
    return SplitState(
        star_colour=star_colour,
        component_colour=colour,
        star=VertexSet(star),
        neighbours=neighbours,
        closure=neighbours,
        remainder=VertexSet(g.full_mask & ~(star | neighbours.mask)),
    )


def extend_closure(g: EdgeColouredGraph, state: SplitState,
                   cfg: Optional[HeuristicConfig] = None) -> SplitState:
    """
    Append, lowest first, vertices with at least ceil(log n) star-colour
    neighbours in the closure so far, until none qualifies
    """
    cfg = cfg or HeuristicConfig()
    threshold = cfg.closure_threshold(g.n)
    closure = state.neighbours.mask
    blocked = state.star.mask | closure
    appended = []

    grown = True
    while grown:
        grown = False
        for v in iter_bits(g.full_mask & ~blocked):
            if (g.colour_mask(v, state.star_colour) & closure).bit_count() >= threshold:
                appended.append(v)
                closure |= 1 << v
                blocked |= 1 << v
                grown = True
                break

    return replace(
        state,
        closure=VertexSet(closure),
        remainder=VertexSet(g.full_mask & ~blocked),
        appended=state.appended + tuple(appended),
    )


def choose_pivot(g: EdgeColouredGraph, state: SplitState) -> SplitState:
    """Pivot w = min(W) and X = its component-colour neighbours in the closure"""
    if not state.remainder:
        return state
    pivot = state.remainder.min_member
    candidates = g.colour_mask(pivot, state.component_colour) & state.closure.mask
    return replace(state, pivot=pivot, candidates=VertexSet(candidates))


def random_two_sided_split(g: EdgeColouredGraph, state: SplitState,
                           cfg: Optional[HeuristicConfig] = None,
                           rng: Optional[np.random.Generator] = None) -> Optional[MonoPartition]:
    """
    Partition into (U and closure) minus S in the star colour and W plus S in
    the component colour, where S is a random half of the pivot's
    component-colour neighbours in the closure and the pivot is min(W)
    """
    cfg = cfg or HeuristicConfig()
    rng = _rng(cfg, rng)
    core = state.star.mask | state.closure.mask

    if not state.remainder:
        if is_mono_connected(g, state.star_colour, VertexSet(core)):
            return MonoPartition((MonoComponent(state.star_colour, VertexSet(core)),), Method.HEURISTIC)
        return None

    state = choose_pivot(g, state)
    candidates = state.candidates.to_list()

    for _ in range(cfg.split_retries):
        sample = _sample(candidates, 0.5, rng)
        first = core & ~sample
        second = state.remainder.mask | sample
        if (first and reach_mask(g, state.star_colour, first & -first, first) == first
                and reach_mask(g, state.component_colour, second & -second, second) == second):
            return MonoPartition(
                (MonoComponent(state.star_colour, VertexSet(first)),
                 MonoComponent(state.component_colour, VertexSet(second))),
                Method.HEURISTIC,
            )
    return None


STAGES = ("colour-split", "star-split", "exact-fallback", "exhausted")


@dataclass
class PartitionAttempt:
    """Outcome of the partition pipeline and the stage that settled it"""
    partition: Optional[MonoPartition]
    stage: str
    star_colour: Optional[int] = None

    def to_dict(self) -> Dict:
        return {
            'stage': self.stage,
            'star_colour': self.star_colour,
            'partition': self.partition.to_dict() if self.partition is not None else None,
        }


def run_partition_pipeline(g: EdgeColouredGraph, cfg: Optional[HeuristicConfig] = None,
                           limits: Optional[SearchLimits] = None) -> PartitionAttempt:
    """
    Two-part monochromatic partition by the proof pipeline, tagged with its stage

    (a) colour-split: a colour with at most two components is split directly;
    (b) star-split: star around the smallest blue component, closure, random
        splits, then the same with the colour roles swapped;
    (c) exact-fallback: small graphs fall back to exact search.
    Whatever is returned has passed an independent validity check.
    """
    g.require_colours(2, "heuristic_two_partition")
    cfg = cfg or HeuristicConfig()
    if g.n == 1:
        return PartitionAttempt(None, "exhausted")
    rng = np.random.default_rng(cfg.seed)
    decomposition = decompose_all(g)

    for c in (RED, BLUE):
        if decomposition.count(c) == 2:
            return PartitionAttempt(MonoPartition(decomposition.components(c), Method.HEURISTIC), "colour-split")
    for c in (RED, BLUE):
        if decomposition.count(c) == 1:
            split = split_spanning_colour(g, c)
            if split is not None:
                return PartitionAttempt(MonoPartition(split.parts, Method.HEURISTIC), "colour-split")

    for component_colour in (BLUE, RED):
        state = build_dominating_star(g, smallest_component(g, component_colour), cfg, rng)
        if state is None:
            continue
        state = extend_closure(g, state, cfg)
        partition = random_two_sided_split(g, state, cfg, rng)
        if partition is not None and _is_partition(g, partition):
            return PartitionAttempt(partition, "star-split", state.star_colour)

    if g.n <= cfg.fallback_n:
        partition = exists_two_partition(g, limits)
        if partition is not None:
            return PartitionAttempt(partition, "exact-fallback")
    return PartitionAttempt(None, "exhausted")


def heuristic_two_partition(g: EdgeColouredGraph, cfg: Optional[HeuristicConfig] = None,
                            limits: Optional[SearchLimits] = None) -> Optional[MonoPartition]:
    """Two-part monochromatic partition by the proof pipeline, or None once its budgets are spent"""
    return run_partition_pipeline(g, cfg, limits).partition


def _is_partition(g: EdgeColouredGraph, partition: MonoPartition) -> bool:
    seen = 0
    for part in partition.parts:
        if seen & part.members.mask or not is_mono_connected(g, part.colour, part.members):
            return False
        seen |= part.members.mask
    return seen == g.full_mask


# ========== Distinct-colour covers ==========

def _require_dense(g: EdgeColouredGraph, numerator: int, denominator: int, operation: str) -> None:
    delta = min_degree(g)
    bound = Rational(numerator * g.n, denominator)
    if delta < bound:
        raise PreconditionError(f"{operation} needs min degree >= {bound}, got {delta}")


def _cover_if_spanning(g: EdgeColouredGraph, parts: List[MonoComponent],
                       method: Method) -> Optional[MonoCover]:
    cover = MonoCover(tuple(parts), method)
    if cover.union.mask == g.full_mask and cover.has_distinct_colours():
        return cover
    return None


def two_colour_distinct_cover(g: EdgeColouredGraph, strict: bool = True) -> Optional[MonoCover]:
    """
    A red component and a blue component covering V, built as in the
    3n/4 lemma: find a component L of order > n/2 (the blue component of a
    smallest red component if red does not span), then add C(x) in the other
    colour for a vertex x outside L

    With strict=True, delta >= 3n/4 is enforced and None comes back only if
    the lemma itself fails on g.
    """
    g.require_colours(2, "two_colour_distinct_cover")
    if strict:
        _require_dense(g, 3, 4, "two_colour_distinct_cover")

    red = decompose(g, RED)
    if len(red) == 1:
        return MonoCover((red[0],), Method.CONSTRUCTIVE)

    smallest = min(red, key=lambda component: (len(component), component.min_member))
    options = [component_of(g, BLUE, smallest.min_member),
               max(red, key=lambda component: (len(component), -component.min_member))]
    large = next((option for option in options if 2 * len(option) > g.n), None)
    if large is None:
        return None
    if large.members.mask == g.full_mask:
        return MonoCover((large,), Method.CONSTRUCTIVE)

    outside = VertexSet(g.full_mask & ~large.members.mask).min_member
    partner = component_of(g, 1 - large.colour, outside)
    return _cover_if_spanning(g, [large, partner], Method.CONSTRUCTIVE)


def _triples(g: EdgeColouredGraph) -> Dict[Tuple[int, int, int], int]:
    """Vertex masks grouped by the (colour 0, 1, 2) component indices they lie in"""
    decomposition = decompose_all(g)
    groups: Dict[Tuple[int, int, int], int] = {}
    for x in g.vertices():
        key = tuple(decomposition.index_of(c, x) for c in range(3))
        groups[key] = groups.get(key, 0) | (1 << x)
    return groups


def _triple_parts(g: EdgeColouredGraph, key: Tuple[int, int, int]) -> List[MonoComponent]:
    decomposition = decompose_all(g)
    return [decomposition.components(c)[key[c]] for c in range(3)]


def triple_intersection_cover(g: EdgeColouredGraph, strict: bool = True) -> Optional[MonoCover]:
    """
    Components R, B, Y of the three colours with |R & B & Y| >= n/8, if any

    Under delta >= 7n/8 every vertex has a neighbour in the intersection, so
    such a triple covers V; the result is checked either way.
    """
    g.require_colours(3, "triple_intersection_cover")
    if strict:
        _require_dense(g, 7, 8, "triple_intersection_cover")

    ranked = sorted(_triples(g).items(), key=lambda item: (-item[1].bit_count(), item[0]))
    for key, mask in ranked:
        if 8 * mask.bit_count() < g.n:
            break
        cover = _cover_if_spanning(g, _triple_parts(g, key), Method.CONSTRUCTIVE)
        if cover is not None:
            return cover
    return None


def pair_intersection_cover(g: EdgeColouredGraph, first: MonoComponent,
                            second: MonoComponent) -> Optional[MonoCover]:
    """
    Distinct-colour cover from two components whose intersection is large:
    either they already cover V, or the third-colour component of an
    uncovered vertex completes them
    """
    if first.colour == second.colour:
        raise GraphError("pair_intersection_cover needs components of distinct colours")
    union = first.members.mask | second.members.mask
    if union == g.full_mask:
        return _cover_if_spanning(g, [first, second], Method.CONSTRUCTIVE)

    third = ({0, 1, 2} - {first.colour, second.colour}).pop()
    outside = VertexSet(g.full_mask & ~union).min_member
    completion = component_of(g, third, outside)
    return _cover_if_spanning(g, [first, second, completion], Method.CONSTRUCTIVE)


def large_component_cover(g: EdgeColouredGraph, large: MonoComponent) -> Optional[MonoCover]:
    """
    Distinct-colour cover from a component of order >= n/2: add the other
    two colours' components at an uncovered vertex u; if something remains
    uncovered at w, swap in the components at w that share n/8 with the
    large one
    """
    if large.members.mask == g.full_mask:
        return MonoCover((large,), Method.CONSTRUCTIVE)

    others = [c for c in range(3) if c != large.colour]
    u = VertexSet(g.full_mask & ~large.members.mask).min_member
    at_u = [component_of(g, c, u) for c in others]
    cover = _cover_if_spanning(g, [large] + at_u, Method.CONSTRUCTIVE)
    if cover is not None:
        return cover

    covered = large.members.mask | at_u[0].members.mask | at_u[1].members.mask
    w = VertexSet(g.full_mask & ~covered).min_member
    at_w = [component_of(g, c, w) for c in others]
    for pick in ((at_u[0], at_w[1]), (at_w[0], at_u[1])):
        cover = _cover_if_spanning(g, [large, *pick], Method.CONSTRUCTIVE)
        if cover is not None:
            return cover
    return None


def three_colour_distinct_cover(g: EdgeColouredGraph, strict: bool = True) -> Optional[MonoCover]:
    """
    Constructive distinct-colour cover for three colours

    Tries, in order, a triple intersection of order >= n/8, a pair
    intersection of order >= n/4 and a component of order >= n/2. When
    delta >= 7n/8 one of them always succeeds.
    """
    g.require_colours(3, "three_colour_distinct_cover")
    if strict:
        _require_dense(g, 7, 8, "three_colour_distinct_cover")

    cover = triple_intersection_cover(g, strict=False)
    if cover is not None:
        return cover

    decomposition = decompose_all(g)
    for a, b in ((0, 1), (0, 2), (1, 2)):
        for left in decomposition.components(a):
            for right in decomposition.components(b):
                if 4 * (left.members.mask & right.members.mask).bit_count() >= g.n:
                    cover = pair_intersection_cover(g, left, right)
                    if cover is not None:
                        return cover

    for component in sorted(decomposition.all_components(),
                            key=lambda component: (-len(component), component.colour)):
        if 2 * len(component) < g.n:
            break
        cover = large_component_cover(g, component)
        if cover is not None:
            return cover
    return None


def large_component_finder(g: EdgeColouredGraph, avoid: int, strict: bool = True) -> MonoComponent:
    """
    A component of order >= 3n/8 in a colour other than `avoid`

    Splits V into the avoid-component of vertex 0 and the rest (smaller side
    first), takes the majority colour among crossing edges and returns the
    component of a crossing edge xy maximising s(xy) = d(x) + d(y), degrees
    counted in the crossing graph of that colour.
    """
    g.require_colours(3, "large_component_finder")
    g.check_colour(avoid)
    if strict:
        _require_dense(g, 7, 8, "large_component_finder")
    components = decompose(g, avoid)
    if len(components) == 1:
        raise PreconditionError(f"graph is connected in colour {avoid}")

    side = components[0].members.mask
    other = g.full_mask & ~side
    if side.bit_count() > other.bit_count():
        side, other = other, side

    counts = [0] * g.r
    for x in iter_bits(side):
        for c in range(g.r):
            if c != avoid:
                counts[c] += (g.colour_mask(x, c) & other).bit_count()
    majority = max((c for c in range(g.r) if c != avoid), key=lambda c: (counts[c], -c))
    if counts[majority] == 0:
        raise PreconditionError("no edges cross the split")

    def crossing_degree(x: int) -> int:
        opposite = other if (side >> x) & 1 else side
        return (g.colour_mask(x, majority) & opposite).bit_count()

    best = None
    for x in iter_bits(side):
        for y in iter_bits(g.colour_mask(x, majority) & other):
            score = crossing_degree(x) + crossing_degree(y)
            if best is None or score > best[0]:
                best = (score, x)
    return component_of(g, majority, best[1])


# ========== Claim probes ==========

@dataclass
class ClaimReport:
    """Verdict of one claim evaluated as a concrete predicate on a graph"""
    claim_id: str
    holds: bool
    witness: Dict = field(default_factory=dict)
    annotation: Optional[str] = None

    def to_dict(self) -> Dict:
        return {
            'claim_id': self.claim_id,
            'holds': self.holds,
            'witness': self.witness,
            'annotation': self.annotation,
        }


def claim_predicate_probe(g: EdgeColouredGraph, claim_id: str,
                          limits: Optional[SearchLimits] = None) -> ClaimReport:
    """
    Evaluate one claim's conclusion on g after checking its hypotheses

    Raises PreconditionError when the hypotheses do not hold, so sweeps can
    count only qualifying instances.
    """
    probes = {
        "claim-2-1": _probe_small_component,
        "claim-3-1": _probe_triple_intersection,
        "claim-3-2": _probe_pair_intersection,
        "claim-3-3": _probe_large_component_cover,
        "claim-3-4": _probe_large_component_order,
        "claim-3-5": _probe_difference,
    }
    if claim_id not in probes:
        raise GraphError(f"unknown claim id '{claim_id}'; expected one of {', '.join(CLAIM_IDS)}")
    return probes[claim_id](g, limits or SearchLimits())


def _probe_small_component(g: EdgeColouredGraph, limits: SearchLimits) -> ClaimReport:
    g.require_colours(2, "claim-2-1")
    delta = min_degree(g)
    if delta < int(ceiling(Rational(2 * g.n - 5, 3))):
        raise PreconditionError(f"claim-2-1 needs min degree >= ceil((2n-5)/3), got {delta}")
    decomposition = decompose_all(g)
    # the bound needs only these counts; a graph with no two-part partition always has them
    if decomposition.count(RED) < 3 or decomposition.count(BLUE) < 3:
        raise PreconditionError("claim-2-1 needs at least three red and three blue components")

    component = smallest_component(g, BLUE)
    holds = bool(len(component) <= Rational(g.n + 1, 6))
    return ClaimReport("claim-2-1", holds, {'smallest_blue': component.to_dict()},
                       None if holds else ASYMPTOTIC)


def _probe_triple_intersection(g: EdgeColouredGraph, limits: SearchLimits) -> ClaimReport:
    g.require_colours(3, "claim-3-1")
    _require_dense(g, 7, 8, "claim-3-1")
    checked = []
    for key, mask in sorted(_triples(g).items()):
        if 8 * mask.bit_count() < g.n:
            continue
        parts = _triple_parts(g, key)
        union = parts[0].members.mask | parts[1].members.mask | parts[2].members.mask
        checked.append(list(key))
        if union != g.full_mask:
            return ClaimReport("claim-3-1", False, {'triple': [p.to_dict() for p in parts]})
    if not checked:
        raise PreconditionError("claim-3-1 needs a triple intersection of order >= n/8")
    return ClaimReport("claim-3-1", True, {'triples_checked': checked})


def _probe_pair_intersection(g: EdgeColouredGraph, limits: SearchLimits) -> ClaimReport:
    g.require_colours(3, "claim-3-2")
    _require_dense(g, 7, 8, "claim-3-2")
    decomposition = decompose_all(g)
    checked = 0
    for a, b in ((0, 1), (0, 2), (1, 2)):
        for left in decomposition.components(a):
            for right in decomposition.components(b):
                if 4 * (left.members.mask & right.members.mask).bit_count() < g.n:
                    continue
                checked += 1
                if pair_intersection_cover(g, left, right) is None:
                    return ClaimReport("claim-3-2", False,
                                       {'pair': [left.to_dict(), right.to_dict()]})
    if not checked:
        raise PreconditionError("claim-3-2 needs two components of distinct colours meeting in >= n/4 vertices")
    return ClaimReport("claim-3-2", True, {'pairs_checked': checked})


def _probe_large_component_cover(g: EdgeColouredGraph, limits: SearchLimits) -> ClaimReport:
    g.require_colours(3, "claim-3-3")
    _require_dense(g, 7, 8, "claim-3-3")
    large = [c for c in decompose_all(g).all_components() if 2 * len(c) >= g.n]
    if not large:
        raise PreconditionError("claim-3-3 needs a component of order >= n/2")
    cover = distinct_colour_cover(g, limits)
    witness = {'large_component': large[0].to_dict(),
               'cover': cover.to_dict() if cover is not None else None}
    return ClaimReport("claim-3-3", cover is not None, witness)


def _probe_large_component_order(g: EdgeColouredGraph, limits: SearchLimits) -> ClaimReport:
    g.require_colours(3, "claim-3-4")
    _require_dense(g, 7, 8, "claim-3-4")
    found = {}
    for avoid in range(3):
        if len(decompose(g, avoid)) == 1:
            continue
        component = large_component_finder(g, avoid)
        found[str(avoid)] = component.to_dict()
        if 8 * len(component) < 3 * g.n:
            return ClaimReport("claim-3-4", False, {'avoid': avoid, 'component': component.to_dict()})
    if not found:
        raise PreconditionError("claim-3-4 needs a colour that does not span")
    return ClaimReport("claim-3-4", True, {'components': found})


def _probe_difference(g: EdgeColouredGraph, limits: SearchLimits) -> ClaimReport:
    g.require_colours(3, "claim-3-5")
    _require_dense(g, 7, 8, "claim-3-5")
    decomposition = decompose_all(g)
    checked = 0
    for a, b in ((0, 1), (0, 2), (1, 2)):
        third = 3 - a - b
        for left in decomposition.components(a):
            if 8 * len(left) < 3 * g.n:
                continue
            for right in decomposition.components(b):
                if 8 * len(right) < 3 * g.n:
                    continue
                only_left = left.members - right.members
                only_right = right.members - left.members
                if 4 * len(only_left) < g.n or 4 * len(only_right) < g.n:
                    continue
                checked += 1
                symmetric = (only_left | only_right).mask
                seed = symmetric & -symmetric
                if reach_mask(g, third, seed, g.full_mask) & symmetric != symmetric:
                    return ClaimReport("claim-3-5", False,
                                       {'pair': [left.to_dict(), right.to_dict()]})
    if not checked:
        raise PreconditionError("claim-3-5 needs two components of order >= 3n/8 each missing n/4 of the other")
    return ClaimReport("claim-3-5", True, {'pairs_checked': checked})
