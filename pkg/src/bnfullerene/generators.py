"""Named (4,6)-fullerene families and the bnf-graph text exchange format.

The tube family is built layer by layer (a hub joined to alternating
vertices of a six-ring, t concentric hexagon layers, a second hub); the two
lantern graphs are fixed 16- and 20-vertex rotation tables; the truncated
octahedron is generated from permutations of (1,2,3,4).  Every generator
output passes validate_fullerene.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .plane_graph import EmbeddedGraph, GraphError, build_graph, validate_fullerene

KIND_NAMES = (
    "cube",
    "hexagonal-prism",
    "tube",
    "lantern-a",
    "lantern-b",
    "truncated-octahedron",
)

_ALIASES = {
    "cube": "cube",
    "prism": "hexagonal-prism",
    "hexagonal-prism": "hexagonal-prism",
    "hexagonal_prism": "hexagonal-prism",
    "hexagonalprism": "hexagonal-prism",
    "tube": "tube",
    "lantern-a": "lantern-a",
    "lantern_a": "lantern-a",
    "lanterna": "lantern-a",
    "lantern-b": "lantern-b",
    "lantern_b": "lantern-b",
    "lanternb": "lantern-b",
    "truncated-octahedron": "truncated-octahedron",
    "truncated_octahedron": "truncated-octahedron",
    "truncatedoctahedron": "truncated-octahedron",
}


@dataclass(frozen=True)
class GraphKind:
    """One of the named graph families; tube carries its layer count t."""

    name: str
    t: int | None = None

    def __post_init__(self):
        if self.name not in KIND_NAMES:
            raise ValueError(f"unknown graph kind {self.name!r}")
        if self.name == "tube":
            if self.t is None or self.t < 0:
                raise ValueError("tube requires a layer count t >= 0")
        elif self.t is not None:
            raise ValueError(f"{self.name} takes no parameter")

    @property
    def spec(self) -> str:
        return f"tube:{self.t}" if self.name == "tube" else self.name

    def __str__(self) -> str:
        return self.spec


CUBE = GraphKind("cube")
HEXAGONAL_PRISM = GraphKind("hexagonal-prism")
LANTERN_A = GraphKind("lantern-a")
LANTERN_B = GraphKind("lantern-b")
TRUNCATED_OCTAHEDRON = GraphKind("truncated-octahedron")


def tube_kind(t: int) -> GraphKind:
    return GraphKind("tube", t)


def parse_kind(text: str) -> GraphKind:
    """Parse a kind spec such as "cube" or "tube:3"."""
    name, sep, param = text.strip().lower().partition(":")
    canonical = _ALIASES.get(name)
    if canonical is None:
        raise ValueError(f"unknown graph kind {name!r}")
    if canonical == "tube":
        if not sep:
            raise ValueError("tube needs a layer count, e.g. tube:2")
        try:
            t = int(param)
        except ValueError:
            raise ValueError(f"invalid tube layer count {param!r}") from None
        return GraphKind("tube", t)
    if sep:
        raise ValueError(f"{canonical} takes no parameter (got {param!r})")
    return GraphKind(canonical)


def _prism_rotation(k: int) -> list[tuple[int, int, int]]:
    # outer cycle 0..k-1 drawn counterclockwise, inner cycle k..2k-1 below it
    rot: list[tuple[int, int, int]] = []
    for i in range(k):
        rot.append(((i + 1) % k, k + i, (i - 1) % k))
    for i in range(k):
        rot.append((i, k + (i + 1) % k, k + (i - 1) % k))
    return rot


def _tube_rotation(t: int) -> list[tuple[int, int, int]]:
    """Two three-square caps joined by t concentric layers of three hexagons.

    Vertex layout: hub 0; ring i (0 <= i <= t) occupies 1+6i .. 6+6i in
    counterclockwise order; second hub last.  Ring i, position j carries its
    radial edge inward when j and i have equal parity, outward otherwise.
    """
    hub1 = 0
    hub2 = 6 * (t + 1) + 1

    def rid(i: int, j: int) -> int:
        return 1 + 6 * i + (j % 6)

    rot: list[tuple[int, int, int]] = [(rid(0, 0), rid(0, 2), rid(0, 4))]
    for i in range(t + 1):
        for j in range(6):
            nxt, prv = rid(i, j + 1), rid(i, j - 1)
            if j % 2 == i % 2:
                radial = hub1 if i == 0 else rid(i - 1, j)
                rot.append((nxt, radial, prv))
            else:
                radial = hub2 if i == t else rid(i + 1, j)
                rot.append((radial, nxt, prv))
    ports = [j for j in range(6) if j % 2 != t % 2]
    # the far hub sees the outermost ring from the other side of the sphere,
    # so its planar rotation is reversed
    rot.append((rid(t, ports[0]), rid(t, ports[2]), rid(t, ports[1])))
    return rot


# Rotation tables for the two lantern graphs: two groups of three squares in
# a line, hexagons distributed around them (16 and 20 vertices).  Transcribed
# from their planar drawings; counterclockwise order.
_LANTERN_A_ROTATION = (
    (7, 1, 12),
    (6, 2, 0),
    (5, 3, 1),
    (4, 8, 2),
    (11, 3, 5),
    (4, 2, 6),
    (5, 1, 7),
    (15, 6, 0),
    (3, 9, 12),
    (8, 10, 13),
    (9, 11, 14),
    (10, 4, 15),
    (0, 8, 13),
    (14, 12, 9),
    (10, 15, 13),
    (14, 11, 7),
)

_LANTERN_B_ROTATION = (
    (7, 1, 12),
    (6, 2, 0),
    (5, 3, 1),
    (4, 8, 2),
    (11, 3, 5),
    (4, 2, 6),
    (5, 1, 7),
    (15, 6, 0),
    (3, 9, 12),
    (8, 10, 16),
    (19, 9, 11),
    (10, 4, 15),
    (0, 8, 13),
    (14, 12, 17),
    (18, 15, 13),
    (14, 11, 7),
    (9, 19, 17),
    (18, 13, 16),
    (19, 14, 17),
    (16, 10, 18),
)


def _truncated_octahedron_rotation() -> list[tuple[int, int, int]]:
    """Permutohedron on four elements: 24 permutations of (1,2,3,4).

    Neighbours swap the values k and k+1; odd permutations take the mirrored
    cyclic order so that all rotations agree with one global orientation.
    """
    verts = sorted(permutations((1, 2, 3, 4)))
    index = {p: i for i, p in enumerate(verts)}

    def swapped(p: tuple[int, ...], a: int, b: int) -> tuple[int, ...]:
        q = list(p)
        ia, ib = q.index(a), q.index(b)
        q[ia], q[ib] = q[ib], q[ia]
        return tuple(q)

    def odd(p: tuple[int, ...]) -> bool:
        inv = sum(p[i] > p[j] for i in range(4) for j in range(i + 1, 4))
        return inv % 2 == 1

    rot = []
    for p in verts:
        nb = [index[swapped(p, k, k + 1)] for k in (1, 2, 3)]
        rot.append((nb[0], nb[2], nb[1]) if odd(p) else tuple(nb))
    return rot


def generate(kind: GraphKind) -> EmbeddedGraph:
    """Build the named graph; the result always passes validate_fullerene."""
    if kind.name == "cube":
        rotation = _prism_rotation(4)
    elif kind.name == "hexagonal-prism":
        rotation = _prism_rotation(6)
    elif kind.name == "tube":
        rotation = _tube_rotation(kind.t)
    elif kind.name == "lantern-a":
        rotation = _LANTERN_A_ROTATION
    elif kind.name == "lantern-b":
        rotation = _LANTERN_B_ROTATION
    else:
        rotation = _truncated_octahedron_rotation()
    g = build_graph(rotation)
    validate_fullerene(g)
    return g


class GraphSyntaxError(GraphError):
    """Malformed bnf-graph text; carries the offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


FORMAT_HEADER = "bnf-graph 1"


def serialize_graph(g: EmbeddedGraph) -> str:
    """Write a graph in the bnf-graph v1 text format."""
    lines = [FORMAT_HEADER, f"n {g.n}"]
    for v, (a, b, c) in enumerate(g.rotation):
        lines.append(f"{v}: {a} {b} {c}")
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> EmbeddedGraph:
    """Parse bnf-graph v1 text; inverse of serialize_graph.

    Raises:
        GraphSyntaxError: the text does not follow the format.
        GraphError: the listing is well-formed but not a valid embedding.
    """
    rows: list[tuple[int, int, int]] = []
    n: int | None = None
    saw_header = False
    lineno = 1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not saw_header:
            if line != FORMAT_HEADER:
                raise GraphSyntaxError(lineno, f"expected {FORMAT_HEADER!r}, got {line!r}")
            saw_header = True
            continue
        if n is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "n":
                raise GraphSyntaxError(lineno, f"expected 'n <count>', got {line!r}")
            try:
                n = int(parts[1])
            except ValueError:
                raise GraphSyntaxError(lineno, f"invalid vertex count {parts[1]!r}") from None
            if n < 0:
                raise GraphSyntaxError(lineno, "vertex count must be nonnegative")
            continue
        head, sep, tail = line.partition(":")
        if not sep:
            raise GraphSyntaxError(lineno, f"expected '<id>: <a> <b> <c>', got {line!r}")
        try:
            vid = int(head.strip())
        except ValueError:
            raise GraphSyntaxError(lineno, f"invalid vertex id {head.strip()!r}") from None
        if vid != len(rows):
            raise GraphSyntaxError(lineno, f"vertex id {vid} out of order, expected {len(rows)}")
        if vid >= n:
            raise GraphSyntaxError(lineno, f"vertex id {vid} exceeds declared count {n}")
        fields = tail.split()
        if len(fields) != 3:
            raise GraphSyntaxError(lineno, f"expected 3 neighbours, got {len(fields)}")
        try:
            row = tuple(int(x) for x in fields)
        except ValueError:
            raise GraphSyntaxError(lineno, f"invalid neighbour in {tail.strip()!r}") from None
        rows.append(row)
    if not saw_header:
        raise GraphSyntaxError(1, "empty input, expected bnf-graph header")
    if n is None:
        raise GraphSyntaxError(lineno, "missing 'n <count>' line")
    if len(rows) != n:
        raise GraphSyntaxError(lineno, f"declared {n} vertices but found {len(rows)} rows")
    return build_graph(rows)
