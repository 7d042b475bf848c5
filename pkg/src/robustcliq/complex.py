"""Abstract simplicial complexes over a fixed vertex universe.

A complex is stored as the full family of its faces, each face a vertex
bitmask.  The universe ``range(universe_size)`` is fixed independently of which
vertices actually occur as faces, so total cut complexes may leave vertices
out and Alexander duals are always taken relative to the whole universe.

Two degenerate complexes are kept apart: the *void* complex has no faces at
all, the *empty* complex has only the empty face.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np

from . import _kernels
from .errors import OddCycle, SizeCapExceeded, UniverseMismatch
from .graph import Graph, VertexSet, bipartition, bits, dumps, independence_number, popcount, to_mask

DEFAULT_TOTAL_CUT_CAP = 16
DEFAULT_DUAL_CAP = 24
DEFAULT_UNIVERSE_CAP = 20


def _face_key(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


class SimplicialComplex:
    def __init__(self, universe_size: int, faces: Iterable[int], *, check: bool = True):
        self.universe_size = int(universe_size)
        self._faces = frozenset(int(f) for f in faces)
        if check:
            self._validate()

    def _validate(self):
        limit = 1 << self.universe_size
        for f in self._faces:
            if f < 0 or f >= limit:
                raise ValueError(f"face {_face_key(f)} outside universe {self.universe_size}")
        if not self.is_downward_closed():
            raise ValueError("face family is not downward closed")

    # -- constructors -------------------------------------------------------

    @classmethod
    def void(cls, universe_size: int) -> "SimplicialComplex":
        return cls(universe_size, (), check=False)

    @classmethod
    def empty(cls, universe_size: int) -> "SimplicialComplex":
        return cls(universe_size, (0,), check=False)

    @classmethod
    def simplex(cls, universe_size: int, vertices: Iterable[int] | None = None):
        """The full simplex on ``vertices`` (default: the whole universe)."""
        mask = (1 << universe_size) - 1 if vertices is None else to_mask(vertices)
        return cls(universe_size, _submasks(mask), check=False)

    @classmethod
    def from_facets(cls, universe_size: int, facets: Iterable[Iterable[int] | int]):
        faces: set[int] = set()
        for f in facets:
            mask = f if isinstance(f, int) else to_mask(f)
            if mask in faces:
                continue
            faces.update(_submasks(mask))
        return cls(universe_size, faces, check=False)

    # -- basic queries ------------------------------------------------------

    @property
    def faces(self) -> frozenset[int]:
        return self._faces

    def __contains__(self, face) -> bool:
        if isinstance(face, VertexSet):
            face = face.mask
        elif not isinstance(face, int):
            face = to_mask(face)
        return face in self._faces

    def __len__(self) -> int:
        return len(self._faces)

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialComplex)
            and self.universe_size == other.universe_size
            and self._faces == other._faces
        )

    def __hash__(self):
        return hash((self.universe_size, self._faces))

    def __repr__(self):
        if self.is_void:
            return f"SimplicialComplex(void, universe={self.universe_size})"
        return f"SimplicialComplex(universe={self.universe_size}, f={self.f_vector()})"

    @property
    def is_void(self) -> bool:
        return not self._faces

    @cached_property
    def _by_dim(self) -> tuple[tuple[int, ...], ...]:
        if not self._faces:
            return ()
        top = max(popcount(f) for f in self._faces)
        buckets: list[list[int]] = [[] for _ in range(top)]
        for f in self._faces:
            if f:
                buckets[popcount(f) - 1].append(f)
        return tuple(tuple(sorted(b, key=_face_key)) for b in buckets)

    @property
    def dimension(self) -> int | None:
        """Largest face dimension; -1 for the empty complex, ``None`` if void."""
        if self.is_void:
            return None
        return len(self._by_dim) - 1

    def masks(self, d: int) -> tuple[int, ...]:
        """Masks of the ``d``-faces in lexicographic order (``d = -1`` is the empty face)."""
        if d == -1:
            return (0,) if 0 in self._faces else ()
        if 0 <= d < len(self._by_dim):
            return self._by_dim[d]
        return ()

    def faces_of_dim(self, d: int) -> list[VertexSet]:
        return [VertexSet(self.universe_size, f) for f in self.masks(d)]

    @property
    def faces_by_dim(self) -> tuple[list[VertexSet], ...]:
        return tuple(self.faces_of_dim(d) for d in range(len(self._by_dim)))

    def f_vector(self) -> list[int]:
        return [len(b) for b in self._by_dim]

    def facets(self) -> list[tuple[int, ...]]:
        """Maximal faces, sorted by dimension then lexicographically."""
        out = []
        for f in self._faces:
            free = ((1 << self.universe_size) - 1) & ~f
            if not any((f | 1 << v) in self._faces for v in bits(free)):
                out.append(f)
        return sorted((_face_key(f) for f in out), key=lambda t: (len(t), t))

    def support(self) -> int:
        m = 0
        for f in self.masks(0):
            m |= f
        return m

    def is_downward_closed(self) -> bool:
        faces = self._faces
        for f in faces:
            for v in bits(f):
                if f ^ (1 << v) not in faces:
                    return False
        return True

    # -- serialisation ------------------------------------------------------

    def to_json_obj(self) -> dict:
        return {"facets": [list(f) for f in self.facets()], "universe": self.universe_size}

    def to_json(self) -> str:
        return dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj) -> "SimplicialComplex":
        if not isinstance(obj, dict) or "universe" not in obj or "facets" not in obj:
            raise ValueError("complex JSON needs 'universe' and 'facets'")
        universe = int(obj["universe"])
        facets = [to_mask(int(v) for v in f) for f in obj["facets"]]
        if any(f >> universe for f in facets):
            raise ValueError("facet vertex outside universe")
        return cls.from_facets(universe, facets)

    @classmethod
    def from_json(cls, text: str) -> "SimplicialComplex":
        return cls.from_json_obj(json.loads(text))

    def f_vector_csv(self) -> str:
        lines = ["dim,count"] + [f"{d},{c}" for d, c in enumerate(self.f_vector())]
        return "\n".join(lines) + "\n"


def _submasks(mask: int) -> list[int]:
    out = []
    s = mask
    while True:
        out.append(s)
        if s == 0:
            return out
        s = (s - 1) & mask


def _same_universe(k: SimplicialComplex, l: SimplicialComplex):
    if k.universe_size != l.universe_size:
        raise UniverseMismatch(f"universes differ: {k.universe_size} vs {l.universe_size}")


def _check_faces_cap(count: int, max_faces: int | None):
    if max_faces is not None and count > max_faces:
        raise SizeCapExceeded(f"{count} faces exceed the face cap {max_faces}")


# --------------------------------------------------------- graph complexes


def robust_clique_complex(
    g: Graph,
    k: int,
    *,
    max_faces: int | None = None,
    max_universe: int | None = DEFAULT_UNIVERSE_CAP,
) -> SimplicialComplex:
    """Vertex sets of ``g`` that contain no independent set of size ``k``."""
    if k < 2:
        raise ValueError("robust clique complexes need k >= 2")
    n = g.vertex_count
    if max_universe is not None and n > max_universe:
        raise SizeCapExceeded(f"universe {n} exceeds cap {max_universe}")
    adj = g.adjacency_array()
    try:
        b = bipartition(g)
    except OddCycle:
        b = None
    if b is not None:
        masks = _bipartite_candidates(b, k, max_faces)
        if masks.size:
            masks = masks[_kernels.alpha_of_masks(adj, masks) < k]
        faces = masks.tolist()
    else:
        faces = _grow_faces(adj, n, k, max_faces)
    _check_faces_cap(len(faces), max_faces)
    return SimplicialComplex(n, faces, check=False)


def _side_subsets(members: list[int], limit: int) -> list[int]:
    out = []
    for r in range(min(limit, len(members)) + 1):
        out.extend(to_mask(c) for c in itertools.combinations(members, r))
    return out


def _bipartite_candidates(b, k, max_faces):
    # k same-side vertices are independent, so faces have <= k-1 per side
    left = np.array(_side_subsets(b.members(0), k - 1), dtype=np.int64)
    right = np.array(_side_subsets(b.members(1), k - 1), dtype=np.int64)
    if max_faces is not None and left.size * right.size > 64 * max_faces:
        raise SizeCapExceeded(
            f"{left.size * right.size} candidate faces exceed 64x the face cap {max_faces}"
        )
    return (left[:, None] | right[None, :]).ravel()


def _grow_faces(adj, n, k, max_faces):
    """Level-wise growth from the empty face; candidates must have all facets present."""
    faces = [0]
    level = [0]
    while level:
        present = set(level)
        cand = []
        for f in level:
            top = f.bit_length()
            for v in range(top, n):
                c = f | 1 << v
                if all((c ^ (1 << w)) in present for w in bits(f)):
                    cand.append(c)
        if not cand:
            break
        arr = np.array(cand, dtype=np.int64)
        level = arr[_kernels.alpha_of_masks(adj, arr) < k].tolist()
        faces.extend(level)
        _check_faces_cap(len(faces), max_faces)
    return faces


def total_cut_complex(g: Graph, k: int, *, cap: int = DEFAULT_TOTAL_CUT_CAP) -> SimplicialComplex:
    """Vertex sets whose complement still contains an independent ``k``-set."""
    if k < 2:
        raise ValueError("total cut complexes need k >= 2")
    n = g.vertex_count
    if n > cap:
        raise SizeCapExceeded(
            f"total cut complex on {n} vertices exceeds the direct cap {cap}; use duality"
        )
    table = _kernels.alpha_table(g.adjacency_array())
    # reversing the table indexes it by complement
    faces = np.flatnonzero(table[::-1] >= k)
    return SimplicialComplex(n, faces.tolist(), check=False)


def total_cut_has_full_two_skeleton(g: Graph, k: int) -> bool:
    """Whether every set of at most 3 vertices is a face of the total ``k``-cut complex.

    Only the complements of small sets are tested, so nothing else of the
    complex is built.
    """
    full = g.full_mask
    for r in range(4):
        for c in itertools.combinations(range(g.vertex_count), r):
            if independence_number(g, full & ~to_mask(c)) < k:
                return False
    return True


# ----------------------------------------------------------- constructions


def alexander_dual(K: SimplicialComplex, *, cap: int = DEFAULT_DUAL_CAP) -> SimplicialComplex:
    """``{W : V - W not in K}`` over the same universe."""
    n = K.universe_size
    if n > cap:
        raise SizeCapExceeded(f"Alexander dual over {n} vertices exceeds cap {cap}")
    member = np.zeros(1 << n, dtype=bool)
    if K.faces:
        member[np.fromiter(K.faces, dtype=np.int64, count=len(K))] = True
    faces = np.flatnonzero(~member[::-1])
    return SimplicialComplex(n, faces.tolist(), check=False)


@dataclass(frozen=True)
class Join:
    complex: SimplicialComplex
    # vertex of L maps to vertex + offset in the join
    offset: int

    def left(self, v: int) -> int:
        return v

    def right(self, v: int) -> int:
        return v + self.offset


def join_with_map(K: SimplicialComplex, L: SimplicialComplex) -> Join:
    off = K.universe_size
    faces = [a | (b << off) for a in K.faces for b in L.faces]
    return Join(SimplicialComplex(off + L.universe_size, faces, check=False), off)


def join(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """Disjoint-union join; ``L``'s vertices are shifted by ``K.universe_size``."""
    return join_with_map(K, L).complex


def embedded_join(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """All unions ``a | b`` with ``a`` in ``K`` and ``b`` in ``L``, same universe."""
    _same_universe(K, L)
    return SimplicialComplex(K.universe_size, {a | b for a in K.faces for b in L.faces}, check=False)


def point(universe_size: int = 1, vertex: int = 0) -> SimplicialComplex:
    return SimplicialComplex(universe_size, (0, 1 << vertex), check=False)


def sphere0(universe_size: int = 2, a: int = 0, b: int = 1) -> SimplicialComplex:
    return SimplicialComplex(universe_size, (0, 1 << a, 1 << b), check=False)


def cone(K: SimplicialComplex, apex: int | None = None) -> SimplicialComplex:
    """Cone over ``K``; the apex defaults to a fresh vertex appended to the universe."""
    if apex is None:
        return join(K, point())
    if not 0 <= apex < K.universe_size:
        raise ValueError(f"apex {apex} outside universe")
    if K.support() >> apex & 1:
        raise ValueError(f"apex {apex} collides with a vertex of the complex")
    bit = 1 << apex
    return SimplicialComplex(K.universe_size, K.faces | {f | bit for f in K.faces}, check=False)


def suspension(K: SimplicialComplex) -> SimplicialComplex:
    return join(K, sphere0())


def complex_union(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    _same_universe(K, L)
    return SimplicialComplex(K.universe_size, K.faces | L.faces, check=False)


def complex_intersection(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    _same_universe(K, L)
    return SimplicialComplex(K.universe_size, K.faces & L.faces, check=False)


def embed(K: SimplicialComplex, universe_size: int) -> SimplicialComplex:
    """Same faces, larger universe (new vertices appended at the top)."""
    if universe_size < K.universe_size:
        raise ValueError("cannot shrink the universe")
    return SimplicialComplex(universe_size, K.faces, check=False)


def relabel(K: SimplicialComplex, perm) -> SimplicialComplex:
    """Apply the vertex permutation ``v -> perm[v]``."""
    def image(f):
        return to_mask(perm[v] for v in bits(f))

    return SimplicialComplex(K.universe_size, (image(f) for f in K.faces), check=False)


def minimal_nonfaces(K: SimplicialComplex) -> list[VertexSet]:
    """Inclusion-minimal vertex sets not in ``K``, lexicographic within each size."""
    n = K.universe_size
    if K.is_void:
        return [VertexSet(n, 0)]
    full = (1 << n) - 1
    found = set()
    faces = K.faces
    for f in faces:
        for v in bits(full & ~f):
            c = f | 1 << v
            if c in faces or c in found:
                continue
            if all((c ^ (1 << w)) in faces for w in bits(f)):
                found.add(c)
    ordered = sorted(found, key=lambda m: (popcount(m), _face_key(m)))
    return [VertexSet(n, m) for m in ordered]


def full_two_skeleton(K: SimplicialComplex) -> bool:
    """True iff every vertex set of size at most 3 is a face."""
    n = K.universe_size
    faces = K.faces
    return all(
        to_mask(c) in faces for r in range(4) for c in itertools.combinations(range(n), r)
    )
