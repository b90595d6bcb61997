"""Hypothesis strategies and brute-force oracles for small coloured graphs."""

from itertools import combinations, product
from typing import List, Optional, Tuple

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from mono.graphs.components import decompose_all, is_mono_connected
from mono.graphs.graph_core import EdgeColouredGraph
from mono.solvers.koenig_cover import BipartiteGraph

PROPERTY_SETTINGS = settings(
    max_examples=120,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)


@st.composite
def coloured_graphs(draw: st.DrawFn, min_n: int = 1, max_n: int = 7, r: int = 2,
                    complete: bool = False) -> EdgeColouredGraph:
    """Edge state per pair: -1 absent (unless complete), else a colour"""
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    low = 0 if complete else -1
    states = draw(st.lists(st.integers(low, r - 1), min_size=len(pairs), max_size=len(pairs)))
    return EdgeColouredGraph(n, r, {pair: state for pair, state in zip(pairs, states) if state >= 0})


@st.composite
def bipartite_graphs(draw: st.DrawFn, max_side: int = 8) -> BipartiteGraph:
    num_left = draw(st.integers(0, max_side))
    num_right = draw(st.integers(0, max_side))
    if num_left == 0 or num_right == 0:
        return BipartiteGraph(num_left, num_right, [])
    pairs = [(i, j) for i in range(num_left) for j in range(num_right)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=min(30, len(pairs))))
    return BipartiteGraph(num_left, num_right, edges)


# ========== Brute-force oracles ==========

def subsets(mask: int) -> List[int]:
    bits = [b for b in range(mask.bit_length()) if mask >> b & 1]
    return [sum(1 << b for b in chosen) for k in range(len(bits) + 1) for chosen in combinations(bits, k)]


def connected_in_some_colour(g: EdgeColouredGraph, mask: int) -> bool:
    members = [x for x in range(g.n) if mask >> x & 1]
    return any(is_mono_connected(g, c, members) for c in range(g.r))


def brute_alpha(g: EdgeColouredGraph) -> int:
    best = 0
    for mask in subsets(g.full_mask):
        if all(g.neighbour_mask(x) & mask == 0 for x in range(g.n) if mask >> x & 1):
            best = max(best, mask.bit_count())
    return best


def brute_min_cover(g: EdgeColouredGraph) -> int:
    masks = sorted({component.members.mask for component in decompose_all(g).all_components()})
    for k in range(1, len(masks) + 1):
        for chosen in combinations(masks, k):
            union = 0
            for mask in chosen:
                union |= mask
            if union == g.full_mask:
                return k
    raise AssertionError("components always cover V")


def brute_min_partition(g: EdgeColouredGraph) -> int:
    memo = {}

    def solve(remaining: int) -> int:
        if not remaining:
            return 0
        if remaining in memo:
            return memo[remaining]
        low = remaining & -remaining
        best = remaining.bit_count()
        for part in subsets(remaining & ~low):
            part |= low
            if connected_in_some_colour(g, part):
                best = min(best, 1 + solve(remaining & ~part))
        memo[remaining] = best
        return best

    return solve(g.full_mask)


def brute_least_cover(g: EdgeColouredGraph) -> List[int]:
    """Masks of the first minimum cover over maximal components in (min vertex, colour, mask) order"""
    colour_of = {}
    for component in decompose_all(g).all_components():
        colour_of.setdefault(component.members.mask, component.colour)
    maximal = [m for m in colour_of if not any(m != other and m & ~other == 0 for other in colour_of)]
    ordered = sorted(maximal, key=lambda m: ((m & -m).bit_length() - 1, colour_of[m], m))
    for k in range(1, len(ordered) + 1):
        for chosen in combinations(ordered, k):
            union = 0
            for mask in chosen:
                union |= mask
            if union == g.full_mask:
                return list(chosen)
    raise AssertionError("components always cover V")


def brute_least_partition_key(g: EdgeColouredGraph) -> Tuple[int, ...]:
    """Least sorted tuple of part minimum vertices over minimum partitions"""
    memo = {}

    def solve(remaining: int) -> Tuple[int, Tuple[int, ...]]:
        if not remaining:
            return 0, ()
        if remaining in memo:
            return memo[remaining]
        low = remaining & -remaining
        seed = low.bit_length() - 1
        best = None
        for part in subsets(remaining & ~low):
            part |= low
            if connected_in_some_colour(g, part):
                count, key = solve(remaining & ~part)
                candidate = (count + 1, (seed,) + key)
                if best is None or candidate < best:
                    best = candidate
        memo[remaining] = best
        return best

    return solve(g.full_mask)[1]


def brute_two_partition(g: EdgeColouredGraph) -> bool:
    for part in subsets(g.full_mask & ~1):
        first = part | 1
        rest = g.full_mask & ~first
        if rest and connected_in_some_colour(g, first) and connected_in_some_colour(g, rest):
            return True
    return False


def brute_distinct_cover(g: EdgeColouredGraph) -> bool:
    decomposition = decompose_all(g)
    choices = [[None] + [c.members.mask for c in decomposition.components(colour)] for colour in range(g.r)]
    for pick in product(*choices):
        union = 0
        for mask in pick:
            union |= mask or 0
        if union == g.full_mask:
            return True
    return False


def brute_connected_sets(g: EdgeColouredGraph, c: int, seed: int, allowed: Optional[int] = None) -> set:
    allowed = g.full_mask if allowed is None else allowed
    found = set()
    for mask in subsets(allowed):
        if mask >> seed & 1 and is_mono_connected(g, c, [x for x in range(g.n) if mask >> x & 1]):
            found.add(mask)
    return found
