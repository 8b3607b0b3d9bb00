"""Plane graphs as rotation systems: face tracing, validation, 3-edge-cuts.

A graph is stored as one counterclockwise neighbor ordering per vertex.
Faces are derived walks, not stored data, so every consumer sees the same
combinatorial map.  Edges are canonical ``(min, max)`` vertex pairs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

Edge = tuple[int, int]
Dart = tuple[int, int]


class EmbeddingError(ValueError):
    """Rotation system violates a structural invariant."""


class NonPlanarError(EmbeddingError):
    """Face count fails the Euler identity, so the map is not a sphere."""


class RotationFormatError(ValueError):
    """Rotation-format document is malformed."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + where)


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Face:
    """One facial walk: a cyclic sequence of darts (directed edges)."""

    id: int
    darts: tuple[Dart, ...]

    @property
    def length(self) -> int:
        return len(self.darts)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(u for u, _ in self.darts)

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(edge_key(u, v) for u, v in self.darts)


@dataclass(frozen=True)
class ValidationReport:
    is_cubic: bool
    is_bipartite: bool
    is_planar_embedding: bool
    vertex_connectivity_at_least_3: bool
    two_coloring: tuple[int, ...] | None = None

    @property
    def is_barnette(self) -> bool:
        return (
            self.is_cubic
            and self.is_bipartite
            and self.is_planar_embedding
            and self.vertex_connectivity_at_least_3
        )


class PlanarEmbedding:
    """Immutable combinatorial map over vertices ``0..n-1``.

    ``rotations[v]`` lists the neighbors of ``v`` in counterclockwise
    order.  Adjacency must be symmetric and simple; both are checked at
    construction.  Faces and the outer-face choice are computed lazily
    and cached, so instances are safe to share across threads.
    """

    def __init__(self, rotations: Sequence[Sequence[int]], outer_face_id: int | None = None):
        rots = tuple(tuple(nbrs) for nbrs in rotations)
        n = len(rots)
        if n < 1:
            raise EmbeddingError("embedding needs at least one vertex")
        for v, nbrs in enumerate(rots):
            seen: set[int] = set()
            for u in nbrs:
                if not 0 <= u < n:
                    raise EmbeddingError(f"vertex {v} lists out-of-range neighbor {u}")
                if u == v:
                    raise EmbeddingError(f"vertex {v} lists a self-loop")
                if u in seen:
                    raise EmbeddingError(f"vertex {v} lists duplicate neighbor {u}")
                seen.add(u)
        for v, nbrs in enumerate(rots):
            for u in nbrs:
                if v not in rots[u]:
                    raise EmbeddingError(
                        f"asymmetric adjacency: {v} lists {u} but {u} does not list {v}"
                    )
        self.rotations = rots
        self.vertex_count = n
        self._explicit_outer = outer_face_id

    # -- basic accessors -------------------------------------------------

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(sorted({edge_key(v, u) for v, nbrs in enumerate(self.rotations) for u in nbrs}))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.rotations[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.rotations[u]

    def is_cubic(self) -> bool:
        return all(len(nbrs) == 3 for nbrs in self.rotations)

    # -- face tracing ----------------------------------------------------

    def next_dart(self, u: int, v: int) -> Dart:
        """Face-successor rule: after dart (u, v) comes (v, w) with w the
        neighbor immediately following u in the rotation at v."""
        rot = self.rotations[v]
        i = rot.index(u)
        return (v, rot[(i + 1) % len(rot)])

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        """All facial walks, in deterministic discovery order.

        Raises NonPlanarError unless V - E + F = 2.
        """
        faces: list[Face] = []
        seen: set[Dart] = set()
        for v in range(self.vertex_count):
            for u in self.rotations[v]:
                start = (v, u)
                if start in seen:
                    continue
                walk = [start]
                seen.add(start)
                cur = self.next_dart(*start)
                while cur != start:
                    walk.append(cur)
                    seen.add(cur)
                    cur = self.next_dart(*cur)
                faces.append(Face(id=len(faces), darts=tuple(walk)))
        f = len(faces)
        if self.vertex_count - self.edge_count + f != 2:
            raise NonPlanarError(
                f"Euler identity fails: V={self.vertex_count} E={self.edge_count} F={f} "
                f"gives {self.vertex_count - self.edge_count + f}, expected 2"
            )
        return tuple(faces)

    @cached_property
    def outer_face_id(self) -> int:
        if self._explicit_outer is not None:
            if not 0 <= self._explicit_outer < len(self.faces):
                raise EmbeddingError(f"outer face id {self._explicit_outer} out of range")
            return self._explicit_outer
        # Default rule: longest face, ties by lexicographically smallest
        # sorted vertex tuple.  Deterministic across runs.
        best = min(self.faces, key=lambda f: (-f.length, tuple(sorted(f.vertices))))
        return best.id

    @property
    def outer_face(self) -> Face:
        return self.faces[self.outer_face_id]

    @cached_property
    def outer_edges(self) -> frozenset[Edge]:
        return frozenset(self.outer_face.edges)

    @cached_property
    def edge_faces(self) -> dict[Edge, tuple[int, ...]]:
        """Map edge -> ids of the (at most two) faces its darts lie on."""
        out: dict[Edge, tuple[int, ...]] = {}
        for face in self.faces:
            for e in face.edges:
                out[e] = out.get(e, ()) + (face.id,)
        return out

    def face_of_dart(self, dart: Dart) -> int:
        return self._dart_face[dart]

    @cached_property
    def _dart_face(self) -> dict[Dart, int]:
        return {d: f.id for f in self.faces for d in f.darts}

    def with_outer_face(self, outer_face_id: int) -> "PlanarEmbedding":
        return PlanarEmbedding(self.rotations, outer_face_id=outer_face_id)

    # -- equality / hashing ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlanarEmbedding):
            return NotImplemented
        return self.rotations == other.rotations and self.outer_face_id == other.outer_face_id

    def __hash__(self) -> int:
        return hash((self.rotations, self.outer_face_id))

    def __repr__(self) -> str:
        return f"PlanarEmbedding(n={self.vertex_count}, m={self.edge_count})"


def trace_faces(embedding: PlanarEmbedding) -> tuple[Face, ...]:
    """Trace all facial cycles; raises NonPlanarError off the sphere."""
    return embedding.faces


# -- parsing / serialization ----------------------------------------------

_INT = re.compile(r"-?\d+")


def _tokens(line: str) -> list[str]:
    return line.split("#", 1)[0].split()


def parse_embedding(text: str) -> PlanarEmbedding:
    """Parse the rotation format.

    Grammar::

        n <vertex_count>
        outer <v1> <v2> ... <vk>     # optional, outer face by vertex cycle
        <vertex_id>: <nbr> <nbr> ...  # one line per vertex, CCW order

    ``#`` starts a comment.  Vertex ids are 0-based and contiguous.
    """
    n: int | None = None
    outer_cycle: list[int] | None = None
    rows: dict[int, list[int]] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = _tokens(raw)
        if not toks:
            continue
        if toks[0] == "n":
            if n is not None:
                raise RotationFormatError("duplicate 'n' directive", lineno)
            if len(toks) != 2 or not _INT.fullmatch(toks[1]):
                raise RotationFormatError("expected 'n <vertex_count>'", lineno)
            n = int(toks[1])
            if n < 1:
                raise RotationFormatError(f"vertex count {n} must be positive", lineno)
            continue
        if toks[0] == "outer":
            if outer_cycle is not None:
                raise RotationFormatError("duplicate 'outer' directive", lineno)
            if len(toks) < 4:
                raise RotationFormatError("outer directive needs at least 3 vertices", lineno)
            try:
                outer_cycle = [int(t) for t in toks[1:]]
            except ValueError:
                raise RotationFormatError("outer directive takes integers", lineno) from None
            continue
        if n is None:
            raise RotationFormatError("vertex line before 'n' directive", lineno)
        head = toks[0]
        if not head.endswith(":"):
            col = raw.index(head) + 1
            raise RotationFormatError(f"expected '<vertex>:' at {head!r}", lineno, col)
        if not _INT.fullmatch(head[:-1]):
            raise RotationFormatError(f"vertex id {head[:-1]!r} is not an integer", lineno)
        v = int(head[:-1])
        if not 0 <= v < n:
            raise RotationFormatError(f"vertex id {v} out of range 0..{n - 1}", lineno)
        if v in rows:
            raise RotationFormatError(f"duplicate rotation line for vertex {v}", lineno)
        nbrs: list[int] = []
        for tok in toks[1:]:
            if not _INT.fullmatch(tok):
                col = raw.index(tok) + 1
                raise RotationFormatError(f"neighbor {tok!r} is not an integer", lineno, col)
            u = int(tok)
            if not 0 <= u < n:
                raise RotationFormatError(f"neighbor {u} out of range 0..{n - 1}", lineno)
            nbrs.append(u)
        rows[v] = nbrs

    if n is None:
        raise RotationFormatError("missing 'n' directive")
    missing = [v for v in range(n) if v not in rows]
    if missing:
        raise RotationFormatError(f"missing rotation line for vertices {missing[:8]}")

    try:
        emb = PlanarEmbedding([rows[v] for v in range(n)])
    except EmbeddingError as exc:
        raise RotationFormatError(str(exc)) from exc

    if outer_cycle is not None:
        emb = emb.with_outer_face(_match_outer_face(emb, outer_cycle))
    return emb


def _match_outer_face(emb: PlanarEmbedding, cycle: list[int]) -> int:
    """Find the traced face equal to ``cycle`` up to rotation and reversal."""
    k = len(cycle)
    want = set()
    doubled = cycle + cycle
    for i in range(k):
        want.add(tuple(doubled[i : i + k]))
    rev = cycle[::-1]
    doubled = rev + rev
    for i in range(k):
        want.add(tuple(doubled[i : i + k]))
    for face in emb.faces:
        if face.length == k and face.vertices in want:
            return face.id
    raise RotationFormatError(f"outer directive {cycle} matches no traced face")


def serialize_embedding(emb: PlanarEmbedding) -> str:
    """Inverse of parse_embedding; emits the outer face explicitly."""
    lines = [f"n {emb.vertex_count}"]
    lines.append("outer " + " ".join(str(v) for v in emb.outer_face.vertices))
    for v in range(emb.vertex_count):
        lines.append(" ".join([f"{v}:"] + [str(u) for u in emb.rotations[v]]))
    return "\n".join(lines) + "\n"


# -- validation ---------------------------------------------------------

def two_coloring(emb: PlanarEmbedding) -> tuple[int, ...] | None:
    """BFS 2-coloring; None when an odd cycle exists."""
    color = [-1] * emb.vertex_count
    for s in range(emb.vertex_count):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = [s]
        while queue:
            v = queue.pop()
            for u in emb.rotations[v]:
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    return tuple(color)


def _connected(adj: Sequence[Sequence[int]], skip: frozenset[int] = frozenset()) -> bool:
    n = len(adj)
    alive = n - len(skip)
    if alive <= 0:
        return True
    start = next(v for v in range(n) if v not in skip)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u not in seen and u not in skip:
                seen.add(u)
                stack.append(u)
    return len(seen) == alive


def _three_connected_exhaustive(emb: PlanarEmbedding) -> bool:
    n = emb.vertex_count
    if n < 4:
        return False
    adj = emb.rotations
    if not _connected(adj):
        return False
    for v in range(n):
        if not _connected(adj, frozenset((v,))):
            return False
    for u in range(n):
        for v in range(u + 1, n):
            if not _connected(adj, frozenset((u, v))):
                return False
    return True


def _vertex_flow_at_least(emb: PlanarEmbedding, s: int, t: int, k: int) -> bool:
    """k vertex-disjoint s-t paths via unit-vertex-capacity augmentation."""
    n = emb.vertex_count
    # Split each vertex v into v_in = 2v, v_out = 2v+1.
    cap: dict[tuple[int, int], int] = {}
    adj: dict[int, list[int]] = {}

    def add(a: int, b: int, c: int) -> None:
        if (a, b) not in cap:
            cap[(a, b)] = 0
            cap[(b, a)] = cap.get((b, a), 0)
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
        cap[(a, b)] += c

    big = n + 1
    for v in range(n):
        add(2 * v, 2 * v + 1, big if v in (s, t) else 1)
        for u in emb.rotations[v]:
            add(2 * v + 1, 2 * u, big)

    flow = 0
    src, dst = 2 * s + 1, 2 * t
    while flow < k:
        parent: dict[int, int] = {src: src}
        queue = [src]
        while queue and dst not in parent:
            nxt: list[int] = []
            for a in queue:
                for b in adj.get(a, ()):
                    if b not in parent and cap.get((a, b), 0) > 0:
                        parent[b] = a
                        nxt.append(b)
            queue = nxt
        if dst not in parent:
            return False
        b = dst
        while b != src:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1
    return True


def _three_connected_flow(emb: PlanarEmbedding) -> bool:
    n = emb.vertex_count
    if n < 4:
        return False
    if not _connected(emb.rotations):
        return False
    if any(len(nbrs) < 3 for nbrs in emb.rotations):
        return False
    # Classic reduction: a minimum cut either avoids vertex 0 (then it
    # separates 0 from some non-neighbor) or contains it (then it
    # separates two neighbors of 0).
    pivot = 0
    nbrs = set(emb.rotations[pivot])
    for t in range(n):
        if t != pivot and t not in nbrs:
            if not _vertex_flow_at_least(emb, pivot, t, 3):
                return False
    nlist = sorted(nbrs)
    for i in range(len(nlist)):
        for j in range(i + 1, len(nlist)):
            x, y = nlist[i], nlist[j]
            if not emb.has_edge(x, y):
                if not _vertex_flow_at_least(emb, x, y, 3):
                    return False
    return True


EXHAUSTIVE_CONNECTIVITY_LIMIT = 200


def validate(emb: PlanarEmbedding) -> ValidationReport:
    """Check the four membership flags independently.

    Planarity is the Euler check of face tracing.  3-connectivity uses
    exhaustive 2-vertex removal up to n = 200 and vertex-capacity
    max-flow beyond.
    """
    coloring = two_coloring(emb)
    try:
        trace_faces(emb)
        planar = True
    except NonPlanarError:
        planar = False
    if emb.vertex_count <= EXHAUSTIVE_CONNECTIVITY_LIMIT:
        three_conn = _three_connected_exhaustive(emb)
    else:
        three_conn = _three_connected_flow(emb)
    return ValidationReport(
        is_cubic=emb.is_cubic(),
        is_bipartite=coloring is not None,
        is_planar_embedding=planar,
        vertex_connectivity_at_least_3=three_conn,
        two_coloring=coloring,
    )


# -- 3-edge-cuts ----------------------------------------------------------

def _components_without(emb: PlanarEmbedding, banned: frozenset[Edge]) -> list[list[int]]:
    n = emb.vertex_count
    seen = [False] * n
    comps: list[list[int]] = []
    for s in range(n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        stack = [s]
        while stack:
            v = stack.pop()
            for u in emb.rotations[v]:
                if not seen[u] and edge_key(v, u) not in banned:
                    seen[u] = True
                    comp.append(u)
                    stack.append(u)
        comps.append(comp)
    return comps


@dataclass(frozen=True)
class EdgeCut:
    """A nontrivial 3-edge-cut and the vertex sets of its two sides."""

    edges: tuple[Edge, Edge, Edge]
    side_a: tuple[int, ...]
    side_b: tuple[int, ...]


def enumerate_3_edge_cuts(emb: PlanarEmbedding) -> list[EdgeCut]:
    """All nontrivial 3-edge-cuts of a connected cubic embedding.

    Minimal edge cuts of a connected plane graph are the simple cycles
    of its dual, so 3-edge-cuts appear as dual triangles: three faces
    pairwise sharing an edge.  Triangles around a single vertex (the
    star cuts) are skipped, and every candidate is confirmed by an
    actual split into exactly two sides.
    """
    if not emb.is_cubic():
        raise EmbeddingError("3-edge-cut enumeration expects a cubic graph")
    if not _connected(emb.rotations):
        raise EmbeddingError("3-edge-cut enumeration expects a connected graph")
    shared: dict[tuple[int, int], list[Edge]] = {}
    for e, fids in emb.edge_faces.items():
        if len(fids) == 2 and fids[0] != fids[1]:
            key = (fids[0], fids[1]) if fids[0] < fids[1] else (fids[1], fids[0])
            shared.setdefault(key, []).append(e)
    neighbors: dict[int, set[int]] = {}
    for f1, f2 in shared:
        neighbors.setdefault(f1, set()).add(f2)
        neighbors.setdefault(f2, set()).add(f1)
    found: dict[tuple[Edge, Edge, Edge], EdgeCut] = {}
    for f1 in sorted(neighbors):
        for f2 in sorted(n for n in neighbors[f1] if n > f1):
            for f3 in sorted(n for n in neighbors[f1] & neighbors[f2] if n > f2):
                for e12 in shared[(f1, f2)]:
                    for e13 in shared[(f1, f3)]:
                        for e23 in shared[(f2, f3)]:
                            triple = tuple(sorted((e12, e13, e23)))
                            if len(set(triple)) != 3 or triple in found:
                                continue
                            if set(triple[0]) & set(triple[1]) & set(triple[2]):
                                continue  # vertex star, trivial
                            comps = _components_without(emb, frozenset(triple))
                            if len(comps) != 2:
                                continue
                            a, b = (sorted(c) for c in comps)
                            if len(a) <= 1 or len(b) <= 1:
                                continue
                            found[triple] = EdgeCut(
                                edges=triple, side_a=tuple(a), side_b=tuple(b)
                            )
    return [found[k] for k in sorted(found)]
