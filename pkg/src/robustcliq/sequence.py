"""Square sequence graphs: C4 grown by gluing squares along edges or corners.

Naming follows the attachment convention used throughout: each square has
vertices ``x, y, u, v`` with edges ``xu, xv, yu, yv``.  Edge gluing reuses the
edge ``{u, y}`` and adds ``x`` then ``v``; corner gluing reuses the path
``u - y - v`` and adds ``x``.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidAttachment
from .graph import Graph, bipartition, dumps, make_grid

EDGE = "edge"
CORNER = "corner"


@dataclass(frozen=True)
class GlueStep:
    kind: str
    attach: tuple[int, ...]
    new_vertices: tuple[int, ...] = ()

    def to_json_obj(self) -> dict:
        return {"attach": list(self.attach), "kind": self.kind}


@dataclass(frozen=True)
class Square:
    """One ``G_i`` with its labelled corners."""

    x: int
    y: int
    u: int
    v: int
    kind: str  # "initial", "edge" or "corner"

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted((self.x, self.y, self.u, self.v)))

    @property
    def edges(self) -> list[tuple[int, int]]:
        pairs = [(self.x, self.u), (self.x, self.v), (self.y, self.u), (self.y, self.v)]
        return sorted((min(a, b), max(a, b)) for a, b in pairs)

    def shared_vertices(self) -> tuple[int, ...]:
        """Vertices of the square already present before it was glued."""
        if self.kind == EDGE:
            return tuple(sorted((self.u, self.y)))
        if self.kind == CORNER:
            return tuple(sorted((self.u, self.y, self.v)))
        return ()


@dataclass(frozen=True)
class SquareSequence:
    steps: tuple[GlueStep, ...]
    graphs: tuple[Graph, ...]
    squares: tuple[Square, ...]

    def __len__(self) -> int:
        return len(self.graphs)

    @property
    def final(self) -> Graph:
        return self.graphs[-1]

    def kinds(self) -> list[str]:
        return [sq.kind for sq in self.squares]

    def graph(self, i: int) -> Graph:
        """``H_i`` with the 1-based indexing used for sequences."""
        return self.graphs[i - 1]

    def square(self, i: int) -> Square:
        return self.squares[i - 1]

    def script_json(self) -> str:
        return dumps({"steps": [s.to_json_obj() for s in self.steps]})

    def summary(self) -> dict:
        g = self.final
        return {
            "edges": len(g.edges),
            "kinds": self.kinds(),
            "length": len(self),
            "vertices": g.vertex_count,
        }


INITIAL_EDGES = ((0, 1), (1, 2), (2, 3), (0, 3))


def build_square_sequence(script: Sequence[GlueStep | dict]) -> SquareSequence:
    """Materialise ``H_1 .. H_n`` from a gluing script, validating each step."""
    edges = set(INITIAL_EDGES)
    n_vertices = 4
    adj = {0: {1, 3}, 1: {0, 2}, 2: {1, 3}, 3: {0, 2}}
    graphs = [Graph(4, edges)]
    squares = [Square(x=3, y=1, u=0, v=2, kind="initial")]
    steps = []

    def has_edge(a, b):
        return a in adj and b in adj[a]

    def add_edge(a, b):
        edges.add((min(a, b), max(a, b)))
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)

    for index, raw in enumerate(script, start=1):
        step = _coerce_step(raw, index)
        for a in step.attach:
            if not (0 <= a < n_vertices):
                raise InvalidAttachment(index, f"vertex {a} does not exist yet")
        if step.kind == EDGE:
            if len(step.attach) != 2:
                raise InvalidAttachment(index, "edge gluing needs attach [u, y]")
            u, y = step.attach
            if not has_edge(u, y):
                raise InvalidAttachment(index, f"{{{u},{y}}} is not an edge")
            x, v = _new_vertices(step, 2, n_vertices, index)
            n_vertices += 2
            add_edge(x, u)
            add_edge(x, v)
            add_edge(y, v)
        elif step.kind == CORNER:
            if len(step.attach) != 3:
                raise InvalidAttachment(index, "corner gluing needs attach [u, y, v]")
            u, y, v = step.attach
            if u == v:
                raise InvalidAttachment(index, "corner gluing needs u != v")
            if not has_edge(u, y):
                raise InvalidAttachment(index, f"{{{u},{y}}} is not an edge")
            if not has_edge(v, y):
                raise InvalidAttachment(index, f"{{{v},{y}}} is not an edge")
            (x,) = _new_vertices(step, 1, n_vertices, index)
            n_vertices += 1
            add_edge(x, u)
            add_edge(x, v)
        else:
            raise InvalidAttachment(index, f"unknown gluing kind {step.kind!r}")
        steps.append(GlueStep(step.kind, tuple(step.attach), (x, v) if step.kind == EDGE else (x,)))
        squares.append(Square(x=x, y=y, u=u, v=v, kind=step.kind))
        graphs.append(Graph(n_vertices, edges))

    seq = SquareSequence(tuple(steps), tuple(graphs), tuple(squares))
    _check_invariants(seq)
    return seq


def _coerce_step(raw, index) -> GlueStep:
    if isinstance(raw, GlueStep):
        return raw
    try:
        return GlueStep(
            str(raw["kind"]),
            tuple(int(a) for a in raw["attach"]),
            tuple(int(a) for a in raw.get("new_vertices", ())),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidAttachment(index, f"malformed step {raw!r}") from exc


def _new_vertices(step, count, n_vertices, index):
    expected = tuple(range(n_vertices, n_vertices + count))
    if step.new_vertices and tuple(step.new_vertices) != expected:
        raise InvalidAttachment(index, f"new vertices must be the next free indices {expected}")
    return expected


def _check_invariants(seq: SquareSequence):
    for i, g in enumerate(seq.graphs, start=1):
        bipartition(g)
        if not g.is_connected() or g.cycle_rank() != i:
            raise AssertionError(f"H_{i} violates square-sequence invariants")


def load_script(text: str) -> list[GlueStep]:
    obj = json.loads(text)
    if not isinstance(obj, dict) or not isinstance(obj.get("steps"), list):
        raise ValueError("gluing script JSON needs a 'steps' list")
    return [_coerce_step(s, i) for i, s in enumerate(obj["steps"], start=1)]


def script_to_json(steps: Sequence[GlueStep]) -> str:
    return dumps({"steps": [s.to_json_obj() for s in steps]})


# --------------------------------------------------------------- generators


@dataclass(frozen=True)
class GridSequence:
    sequence: SquareSequence
    # sequence vertex -> vertex index in make_grid(m, n)
    to_grid: tuple[int, ...]
    m: int
    n: int

    def relabelled_edges(self) -> set[tuple[int, int]]:
        t = self.to_grid
        return {(min(t[a], t[b]), max(t[a], t[b])) for a, b in self.sequence.final.edges}


def grid_sequence(m: int, n: int) -> GridSequence:
    """Canonical square sequence of ``G_{m,n}``: unit squares row by row, bottom up.

    The first square of each row and every square of the first row are edge
    glued; everything else is corner glued.
    """
    grid = make_grid(m, n)
    gidx = lambda i, j: (i - 1) * n + (j - 1)
    seq_of: dict[tuple[int, int], int] = {(1, 1): 0, (1, 2): 1, (2, 2): 2, (2, 1): 3}
    script = []
    nxt = 4
    for i in range(1, m):
        for j in range(1, n):
            if i == 1 and j == 1:
                continue
            if i == 1:
                # reuse the vertical edge on the left, new column j+1
                u, y = seq_of[(1, j)], seq_of[(2, j)]
                script.append(GlueStep(EDGE, (u, y)))
                seq_of[(1, j + 1)], seq_of[(2, j + 1)] = nxt, nxt + 1
                nxt += 2
            elif j == 1:
                # reuse the horizontal edge below, new row i+1
                u, y = seq_of[(i, 1)], seq_of[(i, 2)]
                script.append(GlueStep(EDGE, (u, y)))
                seq_of[(i + 1, 1)], seq_of[(i + 1, 2)] = nxt, nxt + 1
                nxt += 2
            else:
                u, y, v = seq_of[(i + 1, j)], seq_of[(i, j)], seq_of[(i, j + 1)]
                script.append(GlueStep(CORNER, (u, y, v)))
                seq_of[(i + 1, j + 1)] = nxt
                nxt += 1
    seq = build_square_sequence(script)
    to_grid = [0] * seq.final.vertex_count
    for (i, j), s in seq_of.items():
        to_grid[s] = gidx(i, j)
    result = GridSequence(seq, tuple(to_grid), m, n)
    if sorted(to_grid) != list(range(m * n)) or result.relabelled_edges() != set(grid.edges):
        raise AssertionError("canonical grid sequence does not reproduce the grid")
    return result


def valid_attachments(g: Graph) -> list[GlueStep]:
    """Every legal next step on ``g``: oriented edges and ``u < v`` corners."""
    out = []
    for a, b in sorted(g.edges):
        out.append(GlueStep(EDGE, (a, b)))
        out.append(GlueStep(EDGE, (b, a)))
    for y in range(g.vertex_count):
        nbrs = sorted(g.neighbors(y))
        for i, u in enumerate(nbrs):
            for v in nbrs[i + 1 :]:
                out.append(GlueStep(CORNER, (u, y, v)))
    return out


def random_script(length: int, rng: random.Random, kinds=(EDGE, CORNER)) -> list[GlueStep]:
    """Uniformly random valid script producing a sequence of the given length."""
    if length < 1:
        raise ValueError("length must be >= 1")
    script: list[GlueStep] = []
    seq = build_square_sequence(script)
    for _ in range(length - 1):
        options = [s for s in valid_attachments(seq.final) if s.kind in kinds]
        script.append(rng.choice(options))
        seq = build_square_sequence(script)
    return script


def random_sequence(length: int, rng: random.Random, kinds=(EDGE, CORNER)) -> SquareSequence:
    return build_square_sequence(random_script(length, rng, kinds))


def ladder_sequence(length: int) -> SquareSequence:
    return grid_sequence(2, length + 1).sequence
