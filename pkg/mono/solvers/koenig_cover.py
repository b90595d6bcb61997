"""
Koenig Cover
Auxiliary bipartite graph of red and blue components, maximum matching,
Koenig minimum vertex cover and the monochromatic cover of V it induces
"""

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from sympy import Rational, ceiling

from ..graphs.components import Method, MonoComponent, MonoCover, decompose_all
from ..graphs.graph_core import BLUE, RED, EdgeColouredGraph, GraphError


class MatchingNotMaximumError(GraphError):
    """Raised when an augmenting path shows the supplied matching is not maximum"""
    pass


class BipartiteGraph:
    """
    Bipartite graph with left vertices 0..num_left-1 and right vertices
    0..num_right-1; edges are (left, right) index pairs
    """

    def __init__(self, num_left: int, num_right: int, edges: Iterable[Tuple[int, int]]):
        if num_left < 0 or num_right < 0:
            raise GraphError("bipartite side sizes must be non-negative")
        self.num_left = num_left
        self.num_right = num_right

        unique = set()
        for i, j in edges:
            if not (0 <= i < num_left and 0 <= j < num_right):
                raise GraphError(f"bipartite edge ({i}, {j}) out of range "
                                 f"({num_left} x {num_right})")
            unique.add((i, j))
        self.edges: Tuple[Tuple[int, int], ...] = tuple(sorted(unique))

        self.adj_left: List[List[int]] = [[] for _ in range(num_left)]
        self.adj_right: List[List[int]] = [[] for _ in range(num_right)]
        for i, j in self.edges:
            self.adj_left[i].append(j)
            self.adj_right[j].append(i)

    def neighbours(self, i: int) -> List[int]:
        return self.adj_left[i]

    def has_edge(self, i: int, j: int) -> bool:
        return j in self.adj_left[i]

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.num_left}x{self.num_right}, edges={len(self.edges)})"


class AuxBipartiteGraph(BipartiteGraph):
    """Red components on the left, blue components on the right, joined when they intersect"""

    def __init__(self, left: Sequence[MonoComponent], right: Sequence[MonoComponent],
                 edges: Iterable[Tuple[int, int]]):
        super().__init__(len(left), len(right), edges)
        self.left: Tuple[MonoComponent, ...] = tuple(left)
        self.right: Tuple[MonoComponent, ...] = tuple(right)


@dataclass(frozen=True)
class Matching:
    """Edges of a bipartite graph, pairwise disjoint in both coordinates"""
    pairs: FrozenSet[Tuple[int, int]]

    @property
    def size(self) -> int:
        return len(self.pairs)

    def left_mates(self) -> Dict[int, int]:
        return {i: j for i, j in self.pairs}

    def right_mates(self) -> Dict[int, int]:
        return {j: i for i, j in self.pairs}

    def is_matching_of(self, h: BipartiteGraph) -> bool:
        lefts = {i for i, _ in self.pairs}
        rights = {j for _, j in self.pairs}
        if len(lefts) != len(self.pairs) or len(rights) != len(self.pairs):
            return False
        return all(0 <= i < h.num_left and h.has_edge(i, j) for i, j in self.pairs)

    def sorted_pairs(self) -> List[Tuple[int, int]]:
        return sorted(self.pairs)


class Side(Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class HCover:
    """Side-tagged vertex indices touching every edge of the bipartite graph"""
    chosen: FrozenSet[Tuple[Side, int]]

    @property
    def size(self) -> int:
        return len(self.chosen)

    @property
    def left(self) -> List[int]:
        return sorted(i for side, i in self.chosen if side is Side.LEFT)

    @property
    def right(self) -> List[int]:
        return sorted(j for side, j in self.chosen if side is Side.RIGHT)

    def covers(self, h: BipartiteGraph) -> bool:
        return all((Side.LEFT, i) in self.chosen or (Side.RIGHT, j) in self.chosen
                   for i, j in h.edges)


def build_auxiliary(g: EdgeColouredGraph) -> AuxBipartiteGraph:
    """H with every red component on the left and every blue component on the right"""
    g.require_colours(2, "build_auxiliary")
    decomposition = decompose_all(g)
    edges = {(decomposition.index_of(RED, x), decomposition.index_of(BLUE, x))
             for x in g.vertices()}
    return AuxBipartiteGraph(decomposition.components(RED), decomposition.components(BLUE), edges)


def max_matching(h: BipartiteGraph) -> Matching:
    """
    Maximum matching by repeated augmenting-path search

    Left vertices are tried in increasing order and each scans its right
    neighbours lowest index first, so the result is reproducible.
    """
    right_mate: List[Optional[int]] = [None] * h.num_right

    def augment(i: int, seen: List[bool]) -> bool:
        for j in h.adj_left[i]:
            if seen[j]:
                continue
            seen[j] = True
            if right_mate[j] is None or augment(right_mate[j], seen):
                right_mate[j] = i
                return True
        return False

    for i in range(h.num_left):
        augment(i, [False] * h.num_right)

    return Matching(frozenset((i, j) for j, i in enumerate(right_mate) if i is not None))


def _require_matching(h: BipartiteGraph, m: Matching) -> None:
    if not m.is_matching_of(h):
        raise GraphError("supplied pairs are not a matching of the bipartite graph")


def find_augmenting_path(h: BipartiteGraph, m: Matching) -> Optional[List[Tuple[int, int]]]:
    """
    Alternating path between an unmatched left and an unmatched right vertex,
    as the list of its edges starting at the left end; None certifies m maximum
    """
    _require_matching(h, m)
    left_mate, right_mate = m.left_mates(), m.right_mates()

    queue = deque(i for i in range(h.num_left) if i not in left_mate)
    parent: Dict[int, int] = {}

    while queue:
        i = queue.popleft()
        for j in h.adj_left[i]:
            if j in parent:
                continue
            parent[j] = i
            if j not in right_mate:
                path = [(i, j)]
                while i in left_mate:
                    j_matched = left_mate[i]
                    path.append((i, j_matched))
                    i = parent[j_matched]
                    path.append((i, j_matched))
                return path[::-1]
            queue.append(right_mate[j])
    return None


def koenig_vertex_cover(h: BipartiteGraph, m: Matching) -> HCover:
    """
    Minimum vertex cover from a maximum matching by alternating reachability

    Seeds are the unmatched left vertices; the cover is the unreached left
    side plus the reached right side.
    """
    _require_matching(h, m)
    left_mate, right_mate = m.left_mates(), m.right_mates()

    reached_left = {i for i in range(h.num_left) if i not in left_mate}
    reached_right = set()
    queue = deque(sorted(reached_left))

    while queue:
        i = queue.popleft()
        for j in h.adj_left[i]:
            if j == left_mate.get(i) or j in reached_right:
                continue
            reached_right.add(j)
            if j not in right_mate:
                raise MatchingNotMaximumError(
                    f"augmenting path ends at right vertex {j}; matching of size {m.size} is not maximum"
                )
            mate = right_mate[j]
            if mate not in reached_left:
                reached_left.add(mate)
                queue.append(mate)

    chosen = frozenset(
        [(Side.LEFT, i) for i in range(h.num_left) if i not in reached_left]
        + [(Side.RIGHT, j) for j in reached_right]
    )
    if len(chosen) != m.size:
        raise MatchingNotMaximumError(f"cover size {len(chosen)} differs from matching size {m.size}")
    return HCover(chosen)


def cover_two_coloured(g: EdgeColouredGraph) -> MonoCover:
    """Cover of V by the components named in the Koenig cover of the auxiliary graph"""
    h = build_auxiliary(g)
    cover = koenig_vertex_cover(h, max_matching(h))
    parts = [h.left[i] for i in cover.left] + [h.right[j] for j in cover.right]
    return MonoCover(tuple(parts), Method.KOENIG)


def degree_threshold(n: int, t: int) -> Rational:
    """(2n - 2t - 1) / (t + 1) as an exact rational"""
    if n < 1 or t < 1:
        raise GraphError(f"degree threshold needs n >= 1 and t >= 1, got n={n}, t={t}")
    return Rational(2 * n - 2 * t - 1, t + 1)


def degree_floor(n: int, t: int) -> int:
    """Smallest integer minimum degree meeting degree_threshold(n, t)"""
    return int(ceiling(degree_threshold(n, t)))


def realise_bipartite(h: BipartiteGraph) -> EdgeColouredGraph:
    """
    2-coloured graph whose auxiliary graph is isomorphic to h

    One vertex per edge of h; the vertices of each left index are joined by a
    red path and those of each right index by a blue path. Needs every vertex
    of h to have an edge, which holds for any auxiliary graph.
    """
    if not h.edges:
        raise GraphError("cannot realise a bipartite graph without edges")
    if any(not row for row in h.adj_left) or any(not row for row in h.adj_right):
        raise GraphError("cannot realise a bipartite graph with isolated vertices")

    by_left: Dict[int, List[int]] = {}
    by_right: Dict[int, List[int]] = {}
    for vertex, (i, j) in enumerate(h.edges):
        by_left.setdefault(i, []).append(vertex)
        by_right.setdefault(j, []).append(vertex)

    edges: Dict[Tuple[int, int], int] = {}
    for group, colour in ((by_left, RED), (by_right, BLUE)):
        for vertices in group.values():
            for u, v in zip(vertices, vertices[1:]):
                edges[(u, v)] = colour
    return EdgeColouredGraph(len(h.edges), 2, edges)
