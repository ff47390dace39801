"""Plane cubic graphs given by rotation systems, and the fullerene axioms.

A graph is described by its rotation system: for every vertex, the three
neighbours in counterclockwise order around it.  Faces are derived by the
standard tracing rule (sphere model, no distinguished outer face), which
makes the Euler relation an effective validity check: any listing whose
tracing does not close up to n - m + f = 2 is rejected.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Base class for all graph construction / validation errors."""


class NotCubic(GraphError):
    """A vertex does not have exactly three distinct neighbours."""


class Asymmetric(GraphError):
    """u lists v as a neighbour but v does not list u."""


class Disconnected(GraphError):
    """The graph is not connected."""


class EulerViolation(GraphError):
    """Face tracing is inconsistent with an embedding in the sphere."""


class WrongFaceSizes(GraphError):
    """A face has length other than 4 or 6."""


class WrongSquareCount(GraphError):
    """The number of square faces differs from six."""


class NotBipartite(GraphError):
    """The graph contains an odd cycle."""


class ForbiddenH(GraphError):
    """Exactly one hexagonal face, which cannot occur."""


class SharedEdgePair(GraphError):
    """Two faces share more than one edge."""


@dataclass(frozen=True)
class EmbeddedGraph:
    """A connected plane cubic graph with derived faces.

    Attributes:
        rotation: per-vertex counterclockwise neighbour triples.
        edges: canonical sorted tuple of (min, max) vertex pairs.
        faces: derived closed walks, each a tuple of vertices in traversal
            order, rotated to start at its minimal vertex; the face list is
            sorted for determinism.
    """

    rotation: tuple[tuple[int, int, int], ...]
    edges: tuple[tuple[int, int], ...]
    faces: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rotation)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def f(self) -> int:
        return len(self.faces)

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(nbrs) for nbrs in self.rotation)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def edge_faces(self) -> dict[tuple[int, int], tuple[int, ...]]:
        """Map each undirected edge to the indices of its incident faces."""
        out: dict[tuple[int, int], list[int]] = {e: [] for e in self.edges}
        for fi, face in enumerate(self.faces):
            for i, u in enumerate(face):
                v = face[(i + 1) % len(face)]
                out[(u, v) if u < v else (v, u)].append(fi)
        return {e: tuple(fs) for e, fs in out.items()}

    @cached_property
    def vertex_faces(self) -> tuple[tuple[int, ...], ...]:
        """Indices of the three faces incident with each vertex."""
        out: list[list[int]] = [[] for _ in range(self.n)]
        for fi, face in enumerate(self.faces):
            for v in face:
                out[v].append(fi)
        return tuple(tuple(fs) for fs in out)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def degree(self, v: int) -> int:
        return len(self.rotation[v])


def _canonical_face(walk: Sequence[int]) -> tuple[int, ...]:
    # rotate so the minimal vertex comes first; traversal direction is kept
    k = walk.index(min(walk))
    return tuple(walk[k:]) + tuple(walk[:k])


def trace_faces(rotation: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Derive the face walks of a rotation system.

    From the directed edge (u, v), the successor is (v, w) where w follows u
    in the rotation at v; every directed edge lies on exactly one face walk.
    """
    succ = {}
    for v, nbrs in enumerate(rotation):
        for i, u in enumerate(nbrs):
            succ[(u, v)] = (v, nbrs[(i + 1) % len(nbrs)])
    faces = []
    seen: set[tuple[int, int]] = set()
    for start in sorted(succ):
        if start in seen:
            continue
        walk = []
        cur = start
        while cur not in seen:
            seen.add(cur)
            walk.append(cur[0])
            cur = succ[cur]
        if cur != start:
            raise EulerViolation("face tracing does not close into a cycle")
        faces.append(_canonical_face(walk))
    return sorted(faces)


def build_graph(listing: Iterable[Sequence[int]]) -> EmbeddedGraph:
    """Build an EmbeddedGraph from per-vertex ordered neighbour triples.

    Args:
        listing: row i gives the counterclockwise neighbours of vertex i.

    Raises:
        NotCubic: a row does not consist of three distinct valid vertex ids.
        Asymmetric: adjacency is not symmetric.
        Disconnected: the graph is not connected.
        EulerViolation: the traced faces violate n - m + f = 2.
    """
    rows = [tuple(row) for row in listing]
    n = len(rows)
    if n == 0:
        raise NotCubic("graph has no vertices")
    for v, row in enumerate(rows):
        if len(row) != 3:
            raise NotCubic(f"vertex {v} has {len(row)} neighbours, expected 3")
        if len(set(row)) != 3:
            raise NotCubic(f"vertex {v} repeats a neighbour: {row}")
        for w in row:
            if not isinstance(w, int) or not 0 <= w < n:
                raise NotCubic(f"vertex {v} lists invalid neighbour {w!r}")
            if w == v:
                raise NotCubic(f"vertex {v} lists itself as a neighbour")
    nbr_sets = [set(row) for row in rows]
    for v, row in enumerate(rows):
        for w in row:
            if v not in nbr_sets[w]:
                raise Asymmetric(f"vertex {v} lists {w}, but {w} omits {v}")

    reached = {0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for w in rows[v]:
            if w not in reached:
                reached.add(w)
                frontier.append(w)
    if len(reached) != n:
        raise Disconnected(f"only {len(reached)} of {n} vertices reachable")

    faces = trace_faces(rows)
    edges = tuple(sorted({(min(u, w), max(u, w)) for u in range(n) for w in rows[u]}))
    m = len(edges)
    if sum(len(face) for face in faces) != 2 * m:
        raise EulerViolation("face lengths do not sum to twice the edge count")
    if n - m + len(faces) != 2:
        raise EulerViolation(
            f"n - m + f = {n} - {m} + {len(faces)} != 2; not a sphere embedding"
        )
    return EmbeddedGraph(rotation=tuple(rows), edges=edges, faces=tuple(faces))


@dataclass(frozen=True)
class FullereneProfile:
    """Validated facts about a (4,6)-fullerene graph.

    h is the number of hexagonal faces; the vertex and edge counts are then
    forced: n = 2h + 8 and m = 3h + 12.
    """

    n: int
    m: int
    h: int
    squares: tuple[int, ...]
    hexagons: tuple[int, ...]
    bipartition: tuple[frozenset[int], frozenset[int]]


def _two_color(g: EmbeddedGraph) -> tuple[frozenset[int], frozenset[int]]:
    color = [-1] * g.n
    color[0] = 0
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for w in g.rotation[v]:
            if color[w] == -1:
                color[w] = 1 - color[v]
                frontier.append(w)
            elif color[w] == color[v]:
                raise NotBipartite(f"edge ({v}, {w}) joins two vertices of one class")
    return (
        frozenset(v for v in range(g.n) if color[v] == 0),
        frozenset(v for v in range(g.n) if color[v] == 1),
    )


def validate_fullerene(g: EmbeddedGraph) -> FullereneProfile:
    """Check the (4,6)-fullerene axioms and return the validated profile.

    Raises:
        WrongFaceSizes: some face is neither a square nor a hexagon.
        WrongSquareCount: the number of squares differs from six.
        NotBipartite: an odd cycle exists.
        ForbiddenH: exactly one hexagonal face.
        SharedEdgePair: two faces share two or more edges.
    """
    squares = []
    hexagons = []
    for fi, face in enumerate(g.faces):
        if len(set(face)) != len(face):
            # a face walk revisiting a vertex signals a bridge, not a face
            raise WrongFaceSizes(f"face {fi} is not a simple cycle: {face}")
        if len(face) == 4:
            squares.append(fi)
        elif len(face) == 6:
            hexagons.append(fi)
        else:
            raise WrongFaceSizes(f"face {fi} has length {len(face)}")
    if len(squares) != 6:
        raise WrongSquareCount(f"{len(squares)} square faces, expected 6")
    h = len(hexagons)
    if h == 1:
        raise ForbiddenH("a (4,6)-fullerene cannot have exactly one hexagon")
    if h != (g.n - 8) // 2 or g.n != 2 * h + 8 or g.m != 3 * h + 12:
        # unreachable once the face census and Euler relation hold
        raise GraphError(f"face census h={h} contradicts n={g.n}, m={g.m}")

    pair_edges = Counter()
    for fs in g.edge_faces.values():
        if len(fs) != 2:
            raise EulerViolation("an edge does not lie on exactly two faces")
        pair_edges[tuple(sorted(fs))] += 1
    for (fa, fb), cnt in pair_edges.items():
        if fa != fb and cnt > 1:
            raise SharedEdgePair(f"faces {fa} and {fb} share {cnt} edges")

    bipartition = _two_color(g)
    return FullereneProfile(
        n=g.n,
        m=g.m,
        h=h,
        squares=tuple(squares),
        hexagons=tuple(hexagons),
        bipartition=bipartition,
    )
