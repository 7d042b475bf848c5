"""Simple graphs on ``0..n-1``, vertex sets, and the bipartite machinery.

Vertex sets are bitmasks wrapped in :class:`VertexSet`; graphs keep one
neighbourhood mask per vertex, which makes induced subgraphs and
independence tests cheap.
"""
from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .errors import OddCycle


def bits(mask: int) -> Iterator[int]:
    """Set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True, order=False)
class VertexSet:
    """A subset of ``range(universe_size)``; iterates in ascending order."""

    universe_size: int
    mask: int = 0

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.universe_size:
            raise ValueError(f"members out of range for universe {self.universe_size}")

    @classmethod
    def of(cls, universe_size: int, members: Iterable[int]) -> "VertexSet":
        return cls(universe_size, to_mask(members))

    def __contains__(self, v: int) -> bool:
        return v >= 0 and bool(self.mask >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return bits(self.mask)

    def __len__(self) -> int:
        return popcount(self.mask)

    def _check(self, other: "VertexSet"):
        if other.universe_size != self.universe_size:
            raise ValueError("vertex sets live in different universes")

    def __or__(self, other):
        self._check(other)
        return VertexSet(self.universe_size, self.mask | other.mask)

    def __and__(self, other):
        self._check(other)
        return VertexSet(self.universe_size, self.mask & other.mask)

    def __sub__(self, other):
        self._check(other)
        return VertexSet(self.universe_size, self.mask & ~other.mask)

    def complement(self) -> "VertexSet":
        return VertexSet(self.universe_size, ((1 << self.universe_size) - 1) ^ self.mask)

    def to_tuple(self) -> tuple[int, ...]:
        return tuple(bits(self.mask))

    def __repr__(self):
        return f"VertexSet({self.universe_size}, {set(self.to_tuple()) or '{}'})"


class Graph:
    """Undirected simple graph on vertices ``0..vertex_count-1``."""

    __slots__ = ("vertex_count", "edges", "labels", "adj")

    def __init__(self, vertex_count: int, edges: Iterable[Iterable[int]] = (), labels=None):
        if vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        norm = set()
        adj = [0] * vertex_count
        for e in edges:
            u, v = e
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge {{{u},{v}}} out of range")
            a, b = min(u, v), max(u, v)
            norm.add((a, b))
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        self.vertex_count = vertex_count
        self.edges = frozenset(norm)
        self.labels = dict(labels) if labels else {}
        self.adj = tuple(adj)

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.vertex_count == other.vertex_count
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.vertex_count, self.edges))

    def __repr__(self):
        return f"Graph({self.vertex_count} vertices, {len(self.edges)} edges)"

    @property
    def full_mask(self) -> int:
        return (1 << self.vertex_count) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> VertexSet:
        return VertexSet(self.vertex_count, self.adj[v])

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def adjacency_array(self) -> np.ndarray:
        return np.array(self.adj, dtype=np.int64)

    def is_independent(self, mask: int) -> bool:
        return all(not (self.adj[v] & mask) for v in bits(mask))

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == self.full_mask

    def has_triangle(self) -> bool:
        return any(self.adj[u] & self.adj[v] for u, v in self.edges)

    def cycle_rank(self) -> int:
        """``|E| - |V| + c`` where ``c`` counts connected components."""
        comps = 0
        seen = 0
        for s in range(self.vertex_count):
            if seen >> s & 1:
                continue
            comps += 1
            comp = frontier = 1 << s
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
        return len(self.edges) - self.vertex_count + comps

    # -- JSON ---------------------------------------------------------------

    def to_json_obj(self) -> dict:
        obj = {"vertices": self.vertex_count, "edges": [list(e) for e in self.sorted_edges()]}
        if self.labels:
            obj["labels"] = {str(k): v for k, v in sorted(self.labels.items())}
        return obj

    def to_json(self) -> str:
        return dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj) -> "Graph":
        if not isinstance(obj, dict) or "vertices" not in obj or "edges" not in obj:
            raise ValueError("graph JSON needs 'vertices' and 'edges'")
        labels = {int(k): v for k, v in (obj.get("labels") or {}).items()}
        return cls(int(obj["vertices"]), obj["edges"], labels)

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        return cls.from_json_obj(json.loads(text))


def dumps(obj) -> str:
    """Canonical JSON used for every file format in the package."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


# ------------------------------------------------------------------ builders


def make_grid(m: int, n: int) -> Graph:
    """The ``m x n`` grid; vertex ``(i, j)`` (1-based) has index ``(i-1)*n + (j-1)``."""
    if m < 2 or n < 2:
        raise ValueError(f"grid needs m, n >= 2 (got {m}x{n}); paths are not grids")
    idx = lambda i, j: (i - 1) * n + (j - 1)
    edges = []
    for i in range(1, m + 1):
        for j in range(1, n):
            edges.append((idx(i, j), idx(i, j + 1)))
    for i in range(1, m):
        for j in range(1, n + 1):
            edges.append((idx(i, j), idx(i + 1, j)))
    labels = {idx(i, j): f"({i},{j})" for i in range(1, m + 1) for j in range(1, n + 1)}
    return Graph(m * n, edges, labels)


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def random_graph(n: int, p: float, rng) -> Graph:
    return Graph(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p])


# ------------------------------------------------------------ bipartite tools


@dataclass(frozen=True)
class Bipartition:
    side: tuple[int, ...]

    def mask(self, s: int) -> int:
        return to_mask(v for v, c in enumerate(self.side) if c == s)

    def members(self, s: int) -> list[int]:
        return [v for v, c in enumerate(self.side) if c == s]

    def is_valid_for(self, g: Graph) -> bool:
        return len(self.side) == g.vertex_count and all(
            self.side[u] != self.side[v] for u, v in g.edges
        )


def bipartition(g: Graph) -> Bipartition:
    """BFS 2-colouring, each component rooted at its smallest vertex on side 0."""
    side = [-1] * g.vertex_count
    parent = [-1] * g.vertex_count
    for root in range(g.vertex_count):
        if side[root] >= 0:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in bits(g.adj[u]):
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    parent[w] = u
                    queue.append(w)
                elif side[w] == side[u]:
                    raise OddCycle(_odd_cycle(parent, u, w))
    return Bipartition(tuple(side))


def _odd_cycle(parent, u, w):
    def chain(x):
        out = [x]
        while parent[x] >= 0:
            x = parent[x]
            out.append(x)
        return out

    pu, pw = chain(u), chain(w)
    common = set(pu) & set(pw)
    iu = next(i for i, x in enumerate(pu) if x in common)
    iw = pw.index(pu[iu])
    return pu[: iu + 1] + pw[:iw][::-1]


def is_bipartite(g: Graph) -> bool:
    try:
        bipartition(g)
    except OddCycle:
        return False
    return True


@dataclass(frozen=True)
class InducedSubgraph:
    graph: Graph
    # original vertex of each new index
    original: tuple[int, ...]


def induced_subgraph(g: Graph, w: VertexSet | Iterable[int]) -> InducedSubgraph:
    mask = w.mask if isinstance(w, VertexSet) else to_mask(w)
    if mask >> g.vertex_count:
        raise ValueError("vertex set has members outside the graph")
    original = tuple(bits(mask))
    index = {v: i for i, v in enumerate(original)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    labels = {index[v]: lab for v, lab in g.labels.items() if v in index}
    return InducedSubgraph(Graph(len(original), edges, labels), original)


def independent_sets(g: Graph, k: int) -> list[VertexSet]:
    """All independent sets of size exactly ``k``, lexicographic by vertices."""
    if k < 1:
        raise ValueError("k must be >= 1")
    out = []

    def extend(start, chosen, forbidden, need):
        if need == 0:
            out.append(VertexSet(g.vertex_count, chosen))
            return
        for v in range(start, g.vertex_count - need + 1):
            if forbidden >> v & 1:
                continue
            extend(v + 1, chosen | 1 << v, forbidden | g.adj[v], need - 1)

    extend(0, 0, 0, k)
    return out


def independence_number(g: Graph, w: VertexSet | int | None = None) -> int:
    """Exact independence number of ``g`` (or of ``g[w]``).

    Branch and bound: a greedy min-degree independent set gives the initial
    lower bound, and a greedy clique partition bounds each subproblem from
    above.
    """
    adj = g.adj
    if w is None:
        mask = g.full_mask
    else:
        mask = w.mask if isinstance(w, VertexSet) else int(w)

    def greedy(s):
        size = 0
        while s:
            v = min(bits(s), key=lambda x: popcount(adj[x] & s))
            s &= ~(adj[v] | 1 << v)
            size += 1
        return size

    def clique_cover(s):
        cliques: list[int] = []
        for v in bits(s):
            for i, c in enumerate(cliques):
                if c & ~adj[v] == 0:
                    cliques[i] = c | 1 << v
                    break
            else:
                cliques.append(1 << v)
        return len(cliques)

    best = greedy(mask)

    def search(s, size):
        nonlocal best
        if s == 0:
            best = max(best, size)
            return
        if size + clique_cover(s) <= best:
            return
        v = min(bits(s), key=lambda x: popcount(adj[x] & s))
        if popcount(adj[v] & s) <= 1:
            search(s & ~(adj[v] | 1 << v), size + 1)
            return
        v = max(bits(s), key=lambda x: popcount(adj[x] & s))
        search(s & ~(adj[v] | 1 << v), size + 1)
        search(s & ~(1 << v), size)

    search(mask, 0)
    return best


def maximum_matching(g: Graph, b: Bipartition | None = None) -> set[tuple[int, int]]:
    """Maximum-cardinality matching of a bipartite graph by augmenting paths."""
    if b is None:
        b = bipartition(g)
    elif not b.is_valid_for(g):
        raise ValueError("bipartition is not valid for this graph")
    mate = [-1] * g.vertex_count

    def augment(u, visited):
        for w in bits(g.adj[u]):
            if visited >> w & 1:
                continue
            visited |= 1 << w
            if mate[w] < 0:
                mate[w], mate[u] = u, w
                return True, visited
            ok, visited = augment(mate[w], visited)
            if ok:
                mate[w], mate[u] = u, w
                return True, visited
        return False, visited

    for u in b.members(0):
        if mate[u] < 0:
            augment(u, 0)
    return {(min(u, w), max(u, w)) for u, w in enumerate(mate) if w > u}


def minimum_vertex_cover(
    g: Graph, b: Bipartition | None = None, matching: set | None = None
) -> VertexSet:
    """König cover from a maximum matching.

    ``Z`` is everything reachable from unmatched side-0 vertices along
    alternating paths; the cover is ``(side0 - Z) | (side1 & Z)``.
    """
    if b is None:
        b = bipartition(g)
    if matching is None:
        matching = maximum_matching(g, b)
    mate = [-1] * g.vertex_count
    for u, w in matching:
        mate[u], mate[w] = w, u
    left = b.mask(0)
    reached = 0
    queue = deque(v for v in bits(left) if mate[v] < 0)
    for v in queue:
        reached |= 1 << v
    while queue:
        u = queue.popleft()
        # side 0 -> side 1 by non-matching edges, side 1 -> side 0 by the matching
        for w in bits(g.adj[u] & ~reached):
            if w == mate[u]:
                continue
            reached |= 1 << w
            m = mate[w]
            if m >= 0 and not reached >> m & 1:
                reached |= 1 << m
                queue.append(m)
    right = b.mask(1)
    cover = (left & ~reached) | (right & reached)
    return VertexSet(g.vertex_count, cover)


def common_neighbors(g: Graph, u: int, v: int) -> VertexSet:
    if u == v:
        raise ValueError("common_neighbors needs distinct vertices")
    return VertexSet(g.vertex_count, g.adj[u] & g.adj[v])
