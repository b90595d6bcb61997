"""
Monochromatic Components
Maximal single-colour component decomposition, connectivity predicates and the
cover / partition certificate types built from them
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Sequence, Tuple

from .graph_core import (
    EdgeColouredGraph, VertexSet, VertexSetLike, as_vertex_set, iter_bits, colour_name
)


class Method(Enum):
    """How a cover or partition certificate was produced"""
    KOENIG = "koenig"
    EXACT = "exact"
    CONSTRUCTIVE = "constructive"
    HEURISTIC = "heuristic"


@dataclass(frozen=True)
class MonoComponent:
    """A vertex set connected in one colour (not necessarily maximal)"""
    colour: int
    members: VertexSet

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: object) -> bool:
        return x in self.members

    @property
    def min_member(self) -> int:
        return self.members.min_member

    def to_dict(self) -> Dict:
        return {'colour': self.colour, 'members': self.members.to_list()}

    def describe(self) -> str:
        return f"{colour_name(self.colour)} {sorted(self.members.members)}"


def reach_mask(g: EdgeColouredGraph, c: int, seed_mask: int, allowed_mask: int) -> int:
    """Vertices of allowed_mask reachable from seed_mask along c-coloured edges inside allowed_mask"""
    reached = seed_mask & allowed_mask
    frontier = reached
    while frontier:
        step = 0
        for v in iter_bits(frontier):
            step |= g.colour_mask(v, c)
        step &= allowed_mask & ~reached
        reached |= step
        frontier = step
    return reached


def decompose(g: EdgeColouredGraph, c: int) -> List[MonoComponent]:
    """Maximal c-components, singletons included, ordered by minimum member"""
    g.check_colour(c)
    components = []
    remaining = g.full_mask
    while remaining:
        seed = remaining & -remaining
        members = reach_mask(g, c, seed, g.full_mask)
        components.append(MonoComponent(c, VertexSet(members)))
        remaining &= ~members
    return components


def component_of(g: EdgeColouredGraph, c: int, x: int) -> MonoComponent:
    """C_c(x)"""
    g.check_colour(c)
    g.check_vertex(x)
    return MonoComponent(c, VertexSet(reach_mask(g, c, 1 << x, g.full_mask)))


def is_mono_connected(g: EdgeColouredGraph, c: int, vertices: VertexSetLike) -> bool:
    """True iff W is non-empty and the c-edges induced on W connect it"""
    g.check_colour(c)
    w = as_vertex_set(vertices)
    if not w:
        return False
    if w.mask & ~g.full_mask:
        return False
    seed = w.mask & -w.mask
    return reach_mask(g, c, seed, w.mask) == w.mask


class ComponentDecomposition:
    """
    Per-colour lists of maximal monochromatic components with O(1) lookup
    of the component index containing a vertex
    """

    def __init__(self, g: EdgeColouredGraph):
        self.n = g.n
        self.r = g.r
        self.by_colour: Tuple[Tuple[MonoComponent, ...], ...] = tuple(
            tuple(decompose(g, c)) for c in range(g.r)
        )
        self._index: List[List[int]] = []
        for components in self.by_colour:
            lookup = [0] * g.n
            for i, component in enumerate(components):
                for x in component.members:
                    lookup[x] = i
            self._index.append(lookup)

    def components(self, c: int) -> Tuple[MonoComponent, ...]:
        return self.by_colour[c]

    def count(self, c: int) -> int:
        return len(self.by_colour[c])

    def index_of(self, c: int, x: int) -> int:
        return self._index[c][x]

    def component_of(self, c: int, x: int) -> MonoComponent:
        return self.by_colour[c][self._index[c][x]]

    def all_components(self) -> List[MonoComponent]:
        return [component for components in self.by_colour for component in components]

    def counts(self) -> List[int]:
        return [len(components) for components in self.by_colour]


def decompose_all(g: EdgeColouredGraph) -> ComponentDecomposition:
    return ComponentDecomposition(g)


def component_intersections(left: Sequence[MonoComponent],
                            right: Sequence[MonoComponent]) -> List[Tuple[int, int]]:
    """All index pairs (i, j) whose components share a vertex, sorted"""
    pairs = []
    for i, a in enumerate(left):
        for j, b in enumerate(right):
            if a.members.mask & b.members.mask:
                pairs.append((i, j))
    return pairs


# ========== Certificates ==========

@dataclass(frozen=True)
class MonoCover:
    """Monochromatic sets whose union is V"""
    parts: Tuple[MonoComponent, ...]
    method: Method

    @property
    def size(self) -> int:
        return len(self.parts)

    @property
    def union(self) -> VertexSet:
        mask = 0
        for part in self.parts:
            mask |= part.members.mask
        return VertexSet(mask)

    @property
    def colours(self) -> List[int]:
        return [part.colour for part in self.parts]

    def has_distinct_colours(self) -> bool:
        return len(set(self.colours)) == len(self.parts)

    def to_dict(self) -> Dict:
        return {
            'method': self.method.value,
            'size': self.size,
            'parts': [part.to_dict() for part in self.parts],
        }


@dataclass(frozen=True)
class MonoPartition:
    """Pairwise disjoint monochromatic connected sets whose union is V"""
    parts: Tuple[MonoComponent, ...]
    method: Method

    @property
    def size(self) -> int:
        return len(self.parts)

    @property
    def union(self) -> VertexSet:
        mask = 0
        for part in self.parts:
            mask |= part.members.mask
        return VertexSet(mask)

    def canonical(self) -> "MonoPartition":
        """Parts ordered by minimum member"""
        return MonoPartition(tuple(sorted(self.parts, key=lambda p: p.min_member)), self.method)

    def to_dict(self) -> Dict:
        return {
            'method': self.method.value,
            'size': self.size,
            'parts': [part.to_dict() for part in self.parts],
        }
