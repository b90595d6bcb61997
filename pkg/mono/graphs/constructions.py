"""
Extremal Constructions
Deterministic generators for the sharpness examples and seeded random dense
coloured graphs used by the sampling sweeps
"""

from typing import Dict, List, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, Field

from .graph_core import BLUE, RED, EdgeColouredGraph, GraphError


class ConstructionError(GraphError, ValueError):
    """Raised when generator parameters are invalid"""
    pass


class ConstructionSpec(BaseModel):
    """Validated generator request"""
    kind: Literal["cover-t", "antipodal", "random-dense"]
    n: int = Field(..., ge=1, description="Number of vertices")
    t: Optional[int] = Field(None, ge=1, description="Cover size the cover-t example defeats")
    r: Optional[int] = Field(None, ge=1, description="Colour count (antipodal / random-dense)")
    min_degree: Optional[int] = Field(None, ge=0, description="Degree floor for random-dense")
    seed: int = Field(0, description="Seed for random-dense")
    clique_colour: int = Field(RED, ge=0, description="Colour of the internal A_i clique edges")
    deletion_rate: float = Field(1.0, ge=0.0, le=1.0,
                                 description="Probability an allowed deletion is performed")


# ========== Cover-t example ==========

def cover_t_layout(n: int, t: int) -> Tuple[List[int], List[List[int]]]:
    """
    Vertex layout of the cover-t example: X = [x_1..x_{t+1}] = vertices 0..t,
    then A_1, A_2, ... as consecutive blocks

    With n = a(t+1) + rem, rem of the A_i have size a and the rest a-1; the
    larger parts go to odd indices first, then to even ones.
    """
    if t < 1:
        raise ConstructionError(f"cover-t needs t >= 1, got t={t}")
    if n < 2 * (t + 1):
        raise ConstructionError(f"cover-t needs n >= 2(t+1) = {2 * (t + 1)}, got n={n}")

    parts = t + 1
    a, rem = divmod(n, parts)
    sizes = [a - 1] * parts
    # 1-based odd indices are 0-based even positions
    order = list(range(0, parts, 2)) + list(range(1, parts, 2))
    for position in order[:rem]:
        sizes[position] = a

    x = list(range(parts))
    blocks = []
    start = parts
    for size in sizes:
        blocks.append(list(range(start, start + size)))
        start += size
    return x, blocks


def build_cover_t_example(n: int, t: int, clique_colour: int = RED) -> EdgeColouredGraph:
    """
    2-coloured graph with delta = ceil((2n-2t-1)/(t+1)) - 1 in which no two
    vertices of X share a monochromatic component
    """
    if clique_colour not in (RED, BLUE):
        raise ConstructionError(f"clique colour must be 0 or 1, got {clique_colour}")

    x, blocks = cover_t_layout(n, t)
    edges: Dict[Tuple[int, int], int] = {}

    def join(us: List[int], vs: List[int], colour: int) -> None:
        for u in us:
            for v in vs:
                edges[(min(u, v), max(u, v))] = colour

    for block in blocks:
        for i, u in enumerate(block):
            for v in block[i + 1:]:
                edges[(u, v)] = clique_colour

    # A_i - A_{i+1} for i in 1..t (a path, not a cycle)
    for i in range(1, t + 1):
        join(blocks[i - 1], blocks[i], RED if i % 2 == 1 else BLUE)

    for i in range(1, t + 1):
        colour = RED if i % 2 == 1 else BLUE
        join([x[i - 1]], blocks[i - 1] + blocks[i], colour)

    join([x[t]], blocks[0], BLUE)
    join([x[t]], blocks[t], RED if t % 2 == 0 else BLUE)

    return EdgeColouredGraph(n, 2, edges)


def cover_t_min_degree(n: int, t: int) -> int:
    """ceil((2n-2t-1)/(t+1)) - 1, the degree the cover-t example attains"""
    return -((-(2 * n - 2 * t - 1)) // (t + 1)) - 1


# ========== Antipodal example ==========

def antipodal_layout(n: int, r: int) -> Dict[str, List[int]]:
    """
    Parts A(s) for s in {0,1}^r, keyed by the bit string s

    Parts are filled in lexicographic order of s; when 2^r does not divide n
    the lexicographically smaller parts receive one extra vertex.
    """
    if r < 2:
        raise ConstructionError(f"antipodal needs r >= 2, got r={r}")
    parts = 1 << r
    if n < parts:
        raise ConstructionError(f"antipodal needs n >= 2^r = {parts}, got n={n}")

    base, rem = divmod(n, parts)
    layout = {}
    start = 0
    for index in range(parts):
        size = base + (1 if index < rem else 0)
        layout[format(index, f"0{r}b")] = list(range(start, start + size))
        start += size
    return layout


def build_antipodal_example(n: int, r: int) -> EdgeColouredGraph:
    """
    r-coloured graph on 2^r parts with no edges between A(s) and A(1-s); an
    edge between A(s) and A(s') takes the first coordinate on which s and s'
    agree (0-based), and edges inside a part take colour 0
    """
    layout = antipodal_layout(n, r)
    full = (1 << r) - 1
    part_of = [0] * n
    for key, vertices in layout.items():
        for v in vertices:
            part_of[v] = int(key, 2)

    edges: Dict[Tuple[int, int], int] = {}
    for u in range(n):
        for v in range(u + 1, n):
            i, j = part_of[u], part_of[v]
            if i ^ j == full:
                continue
            if i == j:
                edges[(u, v)] = 0
            else:
                agree = ~(i ^ j) & full
                edges[(u, v)] = r - agree.bit_length()
    return EdgeColouredGraph(n, r, edges)


# ========== Random dense colourings ==========

def _thin(n: int, pairs: List[Tuple[int, int]], min_degree: int, rng: np.random.Generator,
          deletion_rate: float) -> List[bool]:
    """Visit pairs in random order, dropping one while both endpoints stay above min_degree"""
    degree = [0] * n
    for u, v in pairs:
        degree[u] += 1
        degree[v] += 1
    kept = [True] * len(pairs)

    for index in rng.permutation(len(pairs)):
        u, v = pairs[index]
        if degree[u] > min_degree and degree[v] > min_degree:
            if rng.random() < deletion_rate:
                kept[index] = False
                degree[u] -= 1
                degree[v] -= 1
    return kept


def _check_random_args(n: int, min_degree: int, deletion_rate: float) -> None:
    if not 0 <= min_degree <= n - 1:
        raise ConstructionError(f"min degree must lie in 0..{n - 1}, got {min_degree}")
    if not 0.0 <= deletion_rate <= 1.0:
        raise ConstructionError(f"deletion rate must lie in [0, 1], got {deletion_rate}")


def random_dense_coloured(n: int, r: int, min_degree: int, seed: int = 0,
                          deletion_rate: float = 1.0) -> EdgeColouredGraph:
    """
    Seeded graph with delta >= min_degree and uniformly random edge colours

    Starts from K_n, visits its edges in a random order and deletes an edge
    whenever both endpoints stay at or above the degree floor, then colours
    the survivors.
    """
    if n < 1 or r < 1:
        raise ConstructionError(f"random-dense needs n >= 1 and r >= 1, got n={n}, r={r}")
    _check_random_args(n, min_degree, deletion_rate)

    rng = np.random.default_rng(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    kept = _thin(n, pairs, min_degree, rng, deletion_rate)

    survivors = [pair for pair, keep in zip(pairs, kept) if keep]
    colours = rng.integers(0, r, size=len(survivors))
    return EdgeColouredGraph(n, r, {pair: int(c) for pair, c in zip(survivors, colours)})


def _composition(total: int, parts: int, rng: np.random.Generator) -> List[int]:
    """total split into parts positive sizes"""
    cuts = sorted(int(c) for c in rng.choice(np.arange(1, total), size=parts - 1, replace=False))
    bounds = [0] + cuts + [total]
    return [b - a for a, b in zip(bounds, bounds[1:])]


def _thinned_graph(n: int, r: int, coloured: Dict[Tuple[int, int], int], min_degree: int,
                   rng: np.random.Generator, deletion_rate: float) -> EdgeColouredGraph:
    pairs = sorted(coloured)
    kept = _thin(n, pairs, min_degree, rng, deletion_rate)
    return EdgeColouredGraph(n, r, {pair: coloured[pair] for pair, keep in zip(pairs, kept) if keep})


def random_pocketed_coloured(n: int, min_degree: int, seed: int = 0, pockets: int = 2,
                             deletion_rate: float = 1.0) -> EdgeColouredGraph:
    """
    Seeded 2-coloured graph with at least pockets + 1 red and pockets + 1
    blue components and delta >= min_degree

    A core K is red-joined to the blue pockets Q_1..Q_p and blue-joined to
    the red pockets P_1..P_p. Distinct Q's are red-joined, distinct P's
    blue-joined, no P meets a Q, and edges inside K or inside a pocket take a
    random colour; so red never leaves a P and blue never leaves a Q. Each
    colour's pockets hold at most n - 1 - min_degree vertices, which keeps
    every degree at the floor before thinning. Labels are shuffled.
    """
    _check_random_args(n, min_degree, deletion_rate)
    budget = n - 1 - min_degree
    if pockets < 1 or pockets > budget or n < 2 * pockets + 1:
        raise ConstructionError(
            f"{pockets} pockets per colour need 1 <= pockets <= n - 1 - min_degree = {budget} "
            f"and n >= {2 * pockets + 1}, got n={n}"
        )

    rng = np.random.default_rng(seed)
    red_total = int(rng.integers(pockets, min(budget, n - 1 - pockets) + 1))
    blue_total = int(rng.integers(pockets, min(budget, n - 1 - red_total) + 1))
    sizes = _composition(red_total, pockets, rng) + _composition(blue_total, pockets, rng)

    # group 0 is the core, 1..p the red pockets, p+1..2p the blue pockets
    group = [0] * n
    order = [int(v) for v in rng.permutation(n)]
    start = n - red_total - blue_total
    for index, size in enumerate(sizes, start=1):
        for v in order[start:start + size]:
            group[v] = index
        start += size

    def is_red_pocket(a: int) -> bool:
        return 1 <= a <= pockets

    coins = rng.integers(0, 2, size=n * (n - 1) // 2)
    coloured: Dict[Tuple[int, int], int] = {}
    index = 0
    for u in range(n):
        for v in range(u + 1, n):
            a, b = sorted((group[u], group[v]))
            coin = int(coins[index])
            index += 1
            if a == b:
                coloured[(u, v)] = coin
            elif a == 0:
                coloured[(u, v)] = BLUE if is_red_pocket(b) else RED
            elif is_red_pocket(a) and is_red_pocket(b):
                coloured[(u, v)] = BLUE
            elif not is_red_pocket(a):
                coloured[(u, v)] = RED
    return _thinned_graph(n, 2, coloured, min_degree, rng, deletion_rate)


# colours an edge may take between the parts X (0), Y (1) and Z (2)
_OFFSET_COLOURS = {(0, 1): (0,), (1, 2): (1,), (0, 2): (2,)}


def random_offset_coloured(n: int, min_degree: int, seed: int = 0,
                           deletion_rate: float = 1.0) -> EdgeColouredGraph:
    """
    Seeded 3-coloured graph on V = X + Y + Z where colour 0 never joins X+Y to
    Z and colour 1 never joins X to Y+Z, with delta >= min_degree

    |X|, |Z| >= ceil(n/4) and |Y| >= ceil(n/8), so a colour-0 component on
    X+Y and a colour-1 component on Y+Z each miss at least n/4 vertices of
    the other. X-Y edges take colour 0, Y-Z colour 1 and X-Z colour 2; edges
    inside a part take a uniform colour. Labels are shuffled.
    """
    _check_random_args(n, min_degree, deletion_rate)
    quarter, eighth = -(-n // 4), -(-n // 8)
    slack = n - 2 * quarter - eighth
    if slack < 0:
        raise ConstructionError(f"offset colouring needs n >= 3, got n={n}")

    rng = np.random.default_rng(seed)
    x_size = quarter + int(rng.integers(0, slack + 1))
    z_size = quarter + int(rng.integers(0, slack - (x_size - quarter) + 1))
    order = [int(v) for v in rng.permutation(n)]
    part = [1] * n
    for v in order[:x_size]:
        part[v] = 0
    for v in order[x_size:x_size + z_size]:
        part[v] = 2

    draws = rng.random(n * (n - 1) // 2)
    coloured: Dict[Tuple[int, int], int] = {}
    index = 0
    for u in range(n):
        for v in range(u + 1, n):
            allowed = _OFFSET_COLOURS.get(tuple(sorted((part[u], part[v]))), (0, 1, 2))
            coloured[(u, v)] = allowed[int(draws[index] * len(allowed))]
            index += 1
    return _thinned_graph(n, 3, coloured, min_degree, rng, deletion_rate)


def random_complete_coloured(n: int, r: int, seed: int = 0) -> EdgeColouredGraph:
    """Uniform r-colouring of K_n"""
    return random_dense_coloured(n, r, n - 1, seed)


def build(spec: ConstructionSpec) -> EdgeColouredGraph:
    """Dispatch a validated ConstructionSpec to its generator"""
    if spec.kind == "cover-t":
        if spec.t is None:
            raise ConstructionError("cover-t needs t")
        return build_cover_t_example(spec.n, spec.t, spec.clique_colour)

    if spec.kind == "antipodal":
        if spec.r is None:
            raise ConstructionError("antipodal needs r")
        return build_antipodal_example(spec.n, spec.r)

    if spec.r is None or spec.min_degree is None:
        raise ConstructionError("random-dense needs r and min_degree")
    return random_dense_coloured(spec.n, spec.r, spec.min_degree, spec.seed, spec.deletion_rate)
