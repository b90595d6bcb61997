"""
Edge-Coloured Graph Core
Canonical representation of r-edge-coloured simple graphs, derived statistics and the text format
"""

from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union


class GraphError(Exception):
    """Base class for every error raised by the mono package"""
    pass


class GraphFormatError(GraphError):
    """Raised when graph text does not follow the `n r` / `u v c` format"""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class VertexRangeError(GraphError, IndexError):
    """Raised when a vertex or colour index is out of range"""
    pass


class ColourCountError(GraphError):
    """Raised when an operation is only defined for a specific number of colours"""
    pass


class SearchLimitError(GraphError):
    """Raised when an exact routine is asked to go beyond its configured limit"""
    pass


# Documentation convention only: colours are dense indices
RED, BLUE, YELLOW = 0, 1, 2
COLOUR_NAMES = {RED: "red", BLUE: "blue", YELLOW: "yellow"}


def colour_name(c: int) -> str:
    return COLOUR_NAMES.get(c, f"colour-{c}")


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in increasing order"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for x in vertices:
        if x < 0:
            raise VertexRangeError(f"negative vertex index {x}")
        mask |= 1 << x
    return mask


@dataclass(frozen=True)
class VertexSet:
    """A set of vertices stored as a bitmask (bit x set <=> x is a member)"""
    mask: int = 0

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "VertexSet":
        return cls(mask_of(vertices))

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls((1 << n) - 1)

    @property
    def members(self) -> Tuple[int, ...]:
        return tuple(iter_bits(self.mask))

    @property
    def min_member(self) -> Optional[int]:
        if not self.mask:
            return None
        return (self.mask & -self.mask).bit_length() - 1

    def __contains__(self, x: object) -> bool:
        return isinstance(x, int) and x >= 0 and (self.mask >> x) & 1 == 1

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __bool__(self) -> bool:
        return self.mask != 0

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask & ~other.mask)

    def __xor__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask ^ other.mask)

    def issubset(self, other: "VertexSet") -> bool:
        return self.mask & ~other.mask == 0

    def isdisjoint(self, other: "VertexSet") -> bool:
        return self.mask & other.mask == 0

    def to_list(self) -> List[int]:
        return list(iter_bits(self.mask))

    def __repr__(self) -> str:
        return f"VertexSet({set(self.members) or '{}'})"


VertexSetLike = Union[VertexSet, Iterable[int]]


def as_vertex_set(vertices: VertexSetLike) -> VertexSet:
    if isinstance(vertices, VertexSet):
        return vertices
    return VertexSet.of(vertices)


class EdgeColouredGraph:
    """
    Simple graph on vertices 0..n-1 whose present edges each carry one of r colours

    Immutable after construction. Edges are keyed by (u, v) with u < v.
    Per-colour adjacency is kept as one bitmask per vertex, so
    colour_mask(x, c) is N_c(x) and neighbour_mask(x) is N(x).
    """

    __slots__ = ("_n", "_r", "_edges", "_adjacency", "_neighbours")

    def __init__(self, n: int, r: int, edges: Optional[Mapping[Tuple[int, int], int]] = None):
        if n < 1:
            raise GraphError(f"vertex count must be at least 1, got {n}")
        if r < 1:
            raise GraphError(f"colour count must be at least 1, got {r}")

        adjacency = [[0] * n for _ in range(r)]
        normalised: Dict[Tuple[int, int], int] = {}

        for (u, v), c in (edges or {}).items():
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if not 0 <= c < r:
                raise VertexRangeError(f"edge ({u}, {v}) has colour {c} outside 0..{r - 1}")
            key = (u, v) if u < v else (v, u)
            if key in normalised:
                raise GraphError(f"duplicate edge {key}")
            normalised[key] = c
            adjacency[c][u] |= 1 << v
            adjacency[c][v] |= 1 << u

        self._n = n
        self._r = r
        self._edges = MappingProxyType(dict(sorted(normalised.items())))
        self._adjacency = tuple(tuple(row) for row in adjacency)
        self._neighbours = tuple(
            _or_all(adjacency[c][x] for c in range(r)) for x in range(n)
        )

    @classmethod
    def from_edge_list(cls, n: int, r: int,
                       triples: Iterable[Tuple[int, int, int]]) -> "EdgeColouredGraph":
        """Build from (u, v, colour) triples; duplicates are rejected"""
        edges: Dict[Tuple[int, int], int] = {}
        for u, v, c in triples:
            key = (u, v) if u < v else (v, u)
            if key in edges:
                raise GraphError(f"duplicate edge {key}")
            edges[key] = c
        return cls(n, r, edges)

    @classmethod
    def complete(cls, n: int, r: int, colour: int = RED) -> "EdgeColouredGraph":
        """K_n with every edge in one colour"""
        return cls(n, r, {(u, v): colour for u in range(n) for v in range(u + 1, n)})

    @property
    def n(self) -> int:
        return self._n

    @property
    def r(self) -> int:
        return self._r

    @property
    def edges(self) -> Mapping[Tuple[int, int], int]:
        return self._edges

    @property
    def full_mask(self) -> int:
        return (1 << self._n) - 1

    def vertices(self) -> range:
        return range(self._n)

    def colour(self, u: int, v: int) -> Optional[int]:
        key = (u, v) if u < v else (v, u)
        return self._edges.get(key)

    def colour_mask(self, x: int, c: int) -> int:
        return self._adjacency[c][x]

    def neighbour_mask(self, x: int) -> int:
        return self._neighbours[x]

    def degree(self, x: int) -> int:
        return self._neighbours[x].bit_count()

    def edge_count(self, c: Optional[int] = None) -> int:
        if c is None:
            return len(self._edges)
        return sum(1 for colour in self._edges.values() if colour == c)

    def check_vertex(self, x: int) -> None:
        if not 0 <= x < self._n:
            raise VertexRangeError(f"vertex {x} outside 0..{self._n - 1}")

    def check_colour(self, c: int) -> None:
        if not 0 <= c < self._r:
            raise VertexRangeError(f"colour {c} outside 0..{self._r - 1}")

    def require_colours(self, r: int, operation: str) -> None:
        if self._r != r:
            raise ColourCountError(f"{operation} needs an {r}-coloured graph, got r={self._r}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColouredGraph):
            return NotImplemented
        return (self._n, self._r, dict(self._edges)) == (other._n, other._r, dict(other._edges))

    def __hash__(self) -> int:
        return hash((self._n, self._r, tuple(self._edges.items())))

    def __repr__(self) -> str:
        return f"EdgeColouredGraph(n={self._n}, r={self._r}, edges={len(self._edges)})"


def _or_all(masks: Iterable[int]) -> int:
    result = 0
    for m in masks:
        result |= m
    return result


# ========== Text format ==========

def to_text(g: EdgeColouredGraph) -> str:
    """Canonical text: header `n r`, then one `u v c` line per edge sorted by (u, v)"""
    lines = [f"{g.n} {g.r}"]
    lines.extend(f"{u} {v} {c}" for (u, v), c in g.edges.items())
    return "\n".join(lines) + "\n"


def from_text(text: str) -> EdgeColouredGraph:
    """Parse the text format; '#' comment lines and blank lines are ignored"""
    header: Optional[Tuple[int, int]] = None
    edges: Dict[Tuple[int, int], int] = {}

    for line_number, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()

        if header is None:
            if len(tokens) != 2:
                raise GraphFormatError("header must be 'n r'", line_number)
            n, r = _parse_ints(tokens, line_number)
            if n < 1 or r < 1:
                raise GraphFormatError(f"header needs n >= 1 and r >= 1, got '{line}'", line_number)
            header = (n, r)
            continue

        if len(tokens) != 3:
            raise GraphFormatError(f"edge line must be 'u v c', got '{line}'", line_number)
        u, v, c = _parse_ints(tokens, line_number)
        n, r = header
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", line_number)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex out of range in '{line}' (n={n})", line_number)
        if not 0 <= c < r:
            raise GraphFormatError(f"colour {c} out of range (r={r})", line_number)
        key = (u, v) if u < v else (v, u)
        if key in edges:
            raise GraphFormatError(f"duplicate edge {key}", line_number)
        edges[key] = c

    if header is None:
        raise GraphFormatError("missing 'n r' header")
    return EdgeColouredGraph(header[0], header[1], edges)


def _parse_ints(tokens: List[str], line_number: int) -> Tuple[int, ...]:
    try:
        return tuple(int(token) for token in tokens)
    except ValueError:
        raise GraphFormatError(f"expected integers, got '{' '.join(tokens)}'", line_number)


def load_graph(path: Union[str, Path]) -> EdgeColouredGraph:
    return from_text(Path(path).read_text(encoding="utf-8"))


def save_graph(g: EdgeColouredGraph, path: Union[str, Path]) -> None:
    Path(path).write_text(to_text(g), encoding="utf-8")


# ========== Degrees and neighbourhoods ==========

def min_degree(g: EdgeColouredGraph) -> int:
    return min(g.degree(x) for x in g.vertices())


def colour_degree(g: EdgeColouredGraph, x: int, c: int) -> int:
    """d_c(x): number of c-coloured edges at x"""
    g.check_vertex(x)
    g.check_colour(c)
    return g.colour_mask(x, c).bit_count()


def colour_neighbourhood(g: EdgeColouredGraph, vertices: VertexSetLike, c: int) -> VertexSet:
    """N_c(W): vertices outside W joined to some vertex of W by a c-coloured edge"""
    g.check_colour(c)
    w = as_vertex_set(vertices)
    reached = 0
    for x in w:
        g.check_vertex(x)
        reached |= g.colour_mask(x, c)
    return VertexSet(reached & ~w.mask)


# ========== Independence number ==========

def maximum_independent_set(g: EdgeColouredGraph, limit: int = 64) -> VertexSet:
    """
    Exact maximum independent set by branch and bound

    Vertices with at most one candidate neighbour are always taken; otherwise
    the search branches on a candidate of maximum degree (include / exclude).
    """
    if g.n > limit:
        raise SearchLimitError(f"independence number limited to n <= {limit}, got n={g.n}")

    neighbours = [g.neighbour_mask(x) for x in g.vertices()]
    best_size = 0
    best_mask = 0

    def branch(candidates: int, chosen: int, size: int) -> None:
        nonlocal best_size, best_mask

        reduced = True
        while reduced:
            reduced = False
            for v in iter_bits(candidates):
                if (neighbours[v] & candidates).bit_count() <= 1:
                    bit = 1 << v
                    chosen |= bit
                    size += 1
                    candidates &= ~(neighbours[v] | bit)
                    reduced = True
                    break

        if size + candidates.bit_count() <= best_size:
            return
        if not candidates:
            best_size, best_mask = size, chosen
            return

        pivot = max(iter_bits(candidates),
                    key=lambda v: (neighbours[v] & candidates).bit_count())
        bit = 1 << pivot
        branch(candidates & ~(neighbours[pivot] | bit), chosen | bit, size + 1)
        branch(candidates & ~bit, chosen, size)

    branch(g.full_mask, 0, 0)
    return VertexSet(best_mask)


def independence_number(g: EdgeColouredGraph, limit: int = 64) -> int:
    """alpha(G), exact"""
    return len(maximum_independent_set(g, limit))


def is_independent(g: EdgeColouredGraph, vertices: VertexSetLike) -> bool:
    w = as_vertex_set(vertices)
    return all(g.neighbour_mask(x) & w.mask == 0 for x in w)


@dataclass
class GraphStats:
    """Summary statistics of an edge-coloured graph"""
    n: int
    r: int
    min_degree: int
    independence_number: Optional[int]
    colour_degrees: List[List[int]] = field(default_factory=list)

    def to_dict(self) -> Dict:
        return {
            'n': self.n,
            'r': self.r,
            'min_degree': self.min_degree,
            'independence_number': self.independence_number,
            'colour_degrees': self.colour_degrees,
        }


def graph_stats(g: EdgeColouredGraph, independence_limit: Optional[int] = 64) -> GraphStats:
    """
    Collect n, r, delta, alpha and the per-vertex colour degree table

    alpha is left as None when n exceeds independence_limit (or the limit is None).
    """
    alpha = None
    if independence_limit is not None and g.n <= independence_limit:
        alpha = independence_number(g, independence_limit)

    return GraphStats(
        n=g.n,
        r=g.r,
        min_degree=min_degree(g),
        independence_number=alpha,
        colour_degrees=[[colour_degree(g, x, c) for c in range(g.r)] for x in g.vertices()],
    )
