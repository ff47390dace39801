"""Six-cycle taxonomy, square adjacency, and the global structure classes.

Every 6-cycle of a (4,6)-fullerene is one of four kinds: the boundary of a
hexagonal face, the boundary of two squares sharing an edge (dual-square),
the boundary of three squares around a common vertex (square-cap), or the
boundary of a square-cap extended by concentric hexagon layers, which occurs
only in tubes.  The kinds are decided by purely local tests so that the
cycle classifier acts as an independent check on the global classifier.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass

from .plane_graph import EmbeddedGraph, GraphError, validate_fullerene


class UnclassifiableCycle(GraphError):
    """A 6-cycle fits none of the four kinds (bug or invalid input)."""


class InconsistentStructure(GraphError):
    """The square-adjacency profile contradicts the decided class."""


class FormulaMismatch(GraphError):
    """An enumerated count disagrees with its closed form."""


class SixCycleKind(enum.Enum):
    HEX_FACE = "hex_face"
    DUAL_SQUARE = "dual_square"
    SQUARE_CAP = "square_cap"
    CAPPED_TUBE = "capped_tube"


@dataclass(frozen=True)
class CycleLabel:
    """Kind of one 6-cycle; layers is set for CAPPED_TUBE only."""

    kind: SixCycleKind
    layers: int | None = None


@dataclass(frozen=True)
class SquareChain:
    """A maximal chain of squares consecutively sharing edges."""

    faces: tuple[int, ...]
    cyclic: bool


@dataclass(frozen=True)
class SquareAdjacencyProfile:
    """How the six squares touch each other.

    y counts unordered pairs of squares sharing an edge; x0/x1/x2 count
    squares with exactly that many square neighbours.  Chains are maximal
    under the shares-an-edge relation and are only well defined when every
    square has at most two square neighbours (always, except in the cube).
    """

    y: int
    x0: int
    x1: int
    x2: int
    chains: tuple[SquareChain, ...]

    @property
    def x(self) -> tuple[int, int, int]:
        return (self.x0, self.x1, self.x2)


class StructureName(enum.Enum):
    CUBE = "cube"
    HEXAGONAL_PRISM = "hexagonal-prism"
    TUBULAR = "tubular"
    LANTERN = "lantern"
    DISPERSIVE = "dispersive"


@dataclass(frozen=True)
class StructureClass:
    """Outcome of the classification: the class tag plus its parameters."""

    name: StructureName
    profile: SquareAdjacencyProfile
    t: int | None = None  # hexagon layers, tubular only


def enumerate_six_cycles(g: EmbeddedGraph) -> tuple[tuple[int, ...], ...]:
    """All 6-cycles, canonically oriented and sorted.

    Each cycle starts at its minimal vertex, and its second vertex is smaller
    than its last, so every cycle appears exactly once.
    """
    adj = g.neighbor_sets
    found: set[tuple[int, ...]] = set()

    def extend(path: list[int]) -> None:
        last = path[-1]
        if len(path) == 6:
            if path[0] in adj[last] and path[1] < last:
                found.add(tuple(path))
            return
        for w in adj[last]:
            if w > path[0] and w not in path:
                path.append(w)
                extend(path)
                path.pop()

    for start in range(g.n):
        for first in adj[start]:
            if first > start:
                extend([start, first])
    return tuple(sorted(found))


def _chord_exists(g: EmbeddedGraph, cycle: tuple[int, ...]) -> bool:
    pos = {v: i for i, v in enumerate(cycle)}
    for i, v in enumerate(cycle):
        for w in g.neighbor_sets[v]:
            j = pos.get(w)
            if j is not None and (j - i) % 6 not in (1, 5):
                return True
    return False


def _cap_center_of_cycle(g: EmbeddedGraph, cycle: tuple[int, ...]) -> int | None:
    cset = set(cycle)
    pos = {v: i for i, v in enumerate(cycle)}
    for w in range(g.n):
        if w in cset:
            continue
        hits = [pos[u] for u in g.neighbor_sets[w] if u in cset]
        if len(hits) == 3 and all((b - a) % 6 == 2 for a, b in zip(sorted(hits), sorted(hits)[1:])):
            return w
    return None


def _capped_tube_layers(g: EmbeddedGraph, cycle: tuple[int, ...]) -> int:
    """Hexagon layers between the cycle and the nearer cap.

    Removing the cycle splits a tube into two sides; each side together with
    the cycle encloses three hexagons per layer.
    """
    cset = set(cycle)
    remaining = [v for v in range(g.n) if v not in cset]
    comp: dict[int, int] = {}
    comps = 0
    for s in remaining:
        if s in comp:
            continue
        comps += 1
        stack = [s]
        comp[s] = comps
        while stack:
            v = stack.pop()
            for w in g.neighbor_sets[v]:
                if w not in cset and w not in comp:
                    comp[w] = comps
                    stack.append(w)
    if comps != 2:
        raise UnclassifiableCycle(
            f"cycle {cycle} does not separate the graph into two sides"
        )
    layer_counts = []
    for side in (1, 2):
        allowed = cset | {v for v, c in comp.items() if c == side}
        hexes = sum(
            1 for face in g.faces if len(face) == 6 and all(v in allowed for v in face)
        )
        if hexes == 0 or hexes % 3:
            raise UnclassifiableCycle(
                f"side of cycle {cycle} encloses {hexes} hexagons, not a layer stack"
            )
        layer_counts.append(hexes // 3)
    return min(layer_counts)


def classify_six_cycle(g: EmbeddedGraph, cycle: tuple[int, ...]) -> CycleLabel:
    """Decide the kind of one 6-cycle.

    Decision order: a chord makes it a dual-square; otherwise a bounding
    hexagonal face; otherwise an off-cycle vertex adjacent to three
    alternating cycle vertices makes it a square-cap boundary; otherwise it
    must bound a square-cap with hexagon layers.
    """
    if len(cycle) != 6 or len(set(cycle)) != 6 or not all(
        g.has_edge(cycle[i], cycle[(i + 1) % 6]) for i in range(6)
    ):
        raise UnclassifiableCycle(f"{cycle} is not a 6-cycle of this graph")
    if _chord_exists(g, cycle):
        return CycleLabel(SixCycleKind.DUAL_SQUARE)
    cset = frozenset(cycle)
    for face in g.faces:
        if len(face) == 6 and frozenset(face) == cset:
            return CycleLabel(SixCycleKind.HEX_FACE)
    if _cap_center_of_cycle(g, cycle) is not None:
        return CycleLabel(SixCycleKind.SQUARE_CAP)
    return CycleLabel(SixCycleKind.CAPPED_TUBE, layers=_capped_tube_layers(g, cycle))


def six_cycle_census(g: EmbeddedGraph) -> dict[SixCycleKind, int]:
    """Count the 6-cycles of each kind."""
    counts = Counter(classify_six_cycle(g, c).kind for c in enumerate_six_cycles(g))
    return {kind: counts.get(kind, 0) for kind in SixCycleKind}


def dual_square_count(g: EmbeddedGraph) -> int:
    """Number of unordered pairs of square faces sharing an edge."""
    squares = {fi for fi, face in enumerate(g.faces) if len(face) == 4}
    pairs = set()
    for fa, fb in g.edge_faces.values():
        if fa != fb and fa in squares and fb in squares:
            pairs.add((min(fa, fb), max(fa, fb)))
    return len(pairs)


def detect_square_caps(g: EmbeddedGraph) -> tuple[int, ...]:
    """Vertices whose three incident faces are all squares."""
    centers = []
    for v, fs in enumerate(g.vertex_faces):
        if len(fs) == 3 and all(len(g.faces[fi]) == 4 for fi in fs):
            centers.append(v)
    return tuple(centers)


def square_adjacency_profile(g: EmbeddedGraph) -> SquareAdjacencyProfile:
    squares = sorted(fi for fi, face in enumerate(g.faces) if len(face) == 4)
    nbrs: dict[int, set[int]] = {s: set() for s in squares}
    for fa, fb in g.edge_faces.values():
        if fa != fb and fa in nbrs and fb in nbrs:
            nbrs[fa].add(fb)
            nbrs[fb].add(fa)
    degs = {s: len(ns) for s, ns in nbrs.items()}
    y = sum(degs.values()) // 2
    x = Counter(degs.values())
    chains: list[SquareChain] = []
    if all(d <= 2 for d in degs.values()):
        seen: set[int] = set()
        for s in squares:
            if s in seen:
                continue
            # walk to one end of the component, then traverse it
            comp = {s}
            stack = [s]
            while stack:
                v = stack.pop()
                for w in nbrs[v]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            ends = sorted(v for v in comp if degs[v] <= 1)
            cyclic = not ends
            cur = min(comp) if cyclic else ends[0]
            order = [cur]
            prev = None
            while len(order) < len(comp):
                nxt = min(w for w in nbrs[cur] if w != prev)
                order.append(nxt)
                prev, cur = cur, nxt
            chains.append(SquareChain(faces=tuple(order), cyclic=cyclic))
        chains.sort(key=lambda ch: ch.faces)
    return SquareAdjacencyProfile(
        y=y, x0=x.get(0, 0), x1=x.get(1, 0), x2=x.get(2, 0), chains=tuple(chains)
    )


def classify_structure(g: EmbeddedGraph) -> StructureClass:
    """Decide the global class: cube, hexagonal prism, tubular, lantern or
    dispersive.

    Decision order: h = 0 is the cube; a square-cap centre forces a tube;
    a maximal square chain of length >= 4 forces the hexagonal prism; a
    chain of exactly three squares forces the lantern; anything else is
    dispersive.  Each branch cross-checks its expected adjacency profile.
    """
    profile = validate_fullerene(g)
    sq = square_adjacency_profile(g)
    h = profile.h

    if h == 0:
        return StructureClass(StructureName.CUBE, sq)

    if sq.x0 + sq.x1 + sq.x2 != 6:
        raise InconsistentStructure(
            f"a square has more than two square neighbours with h={h}"
        )
    if sq.x1 + 2 * sq.x2 != 2 * sq.y:
        raise InconsistentStructure("square-neighbour degrees disagree with y")

    if detect_square_caps(g):
        if h % 3:
            raise InconsistentStructure(f"square-cap present but h={h} not divisible by 3")
        return StructureClass(StructureName.TUBULAR, sq, t=h // 3)

    longest = max((len(ch.faces) for ch in sq.chains), default=0)
    if longest >= 4:
        if sq.x != (0, 0, 6) or sq.y != 6 or h != 2:
            raise InconsistentStructure(
                f"chain of {longest} squares but profile {sq.x}, y={sq.y}, h={h}"
            )
        return StructureClass(StructureName.HEXAGONAL_PRISM, sq)

    if longest == 3:
        if sq.x != (0, 4, 2) or sq.y != 4:
            raise InconsistentStructure(
                f"three squares in a line but profile {sq.x}, y={sq.y}"
            )
        return StructureClass(StructureName.LANTERN, sq)

    if sq.x2 != 0 or sq.x0 != 6 - 2 * sq.y or sq.x1 != 2 * sq.y:
        raise InconsistentStructure(f"dispersive profile violated: {sq.x}, y={sq.y}")
    return StructureClass(StructureName.DISPERSIVE, sq)


def six_cycle_count_formula(cls: StructureClass, h: int, y: int) -> int:
    """Closed form for the number of 6-cycles of a classified graph."""
    if cls.name is StructureName.CUBE:
        return 16
    if cls.name is StructureName.TUBULAR:
        return 4 * cls.t + 7
    return h + y


def six_cycle_count(g: EmbeddedGraph) -> int:
    """Number of 6-cycles, cross-checked against the closed form."""
    profile = validate_fullerene(g)
    cls = classify_structure(g)
    count = len(enumerate_six_cycles(g))
    expected = six_cycle_count_formula(cls, profile.h, cls.profile.y)
    if count != expected:
        raise FormulaMismatch(
            f"enumerated {count} six-cycles but the {cls.name.value} formula gives {expected}"
        )
    return count
