"""Exact counting of k-matchings and small path/cycle pattern subgraphs.

Two independent counters are provided.  count_pattern places one component
at a time (paths and cycles as directed walks, leftover single edges in
index order) and divides out the symmetry factor; brute_force_oracle
classifies raw edge subsets by their component shapes and never shares code
with the targeted enumerator.  Counting convention throughout: a subgraph is
an edge subset together with its endpoints, so occurrences are not required
to be induced.
"""

from __future__ import annotations

import threading
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import prod

from .plane_graph import EmbeddedGraph, GraphError

Component = tuple[str, int]  # ("path" | "cycle", number of edges)


class InexactDivision(GraphError):
    """The ordered placement count is not divisible by the symmetry factor."""


def _factorial(r: int) -> int:
    return prod(range(2, r + 1)) if r > 1 else 1


@dataclass(frozen=True)
class Pattern:
    """A multiset of vertex-disjoint path and cycle components.

    Attributes:
        name: catalog letter, or None for ad-hoc patterns.
        components: sorted (kind, edge count) pairs.
    """

    name: str | None
    components: tuple[Component, ...]

    def __post_init__(self):
        for kind, e in self.components:
            if kind not in ("path", "cycle"):
                raise ValueError(f"unknown component kind {kind!r}")
            if kind == "path" and e < 1:
                raise ValueError("a path component needs at least one edge")
            if kind == "cycle" and e < 3:
                raise ValueError("a cycle component needs at least three edges")
        object.__setattr__(self, "components", tuple(sorted(self.components)))

    @property
    def edge_total(self) -> int:
        return sum(e for _, e in self.components)

    @property
    def vertex_total(self) -> int:
        return sum(e + 1 if kind == "path" else e for kind, e in self.components)

    @property
    def signature(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """(cycle lengths, path lengths), both sorted."""
        cycles = tuple(sorted(e for kind, e in self.components if kind == "cycle"))
        paths = tuple(sorted(e for kind, e in self.components if kind == "path"))
        return (cycles, paths)

    @property
    def automorphism_count(self) -> int:
        per = prod(2 if kind == "path" else 2 * e for kind, e in self.components)
        rep = prod(_factorial(r) for r in Counter(self.components).values())
        return per * rep


def path(edges: int) -> Component:
    return ("path", edges)


def cycle(edges: int) -> Component:
    return ("cycle", edges)


def edge() -> Component:
    return ("path", 1)


# Catalog of the seventeen counted patterns.
PATTERNS: dict[str, Pattern] = {
    "C": Pattern("C", (path(3),)),
    "D": Pattern("D", (path(2), edge(), edge())),
    "E": Pattern("E", (path(3), edge())),
    "H": Pattern("H", (cycle(4),)),
    "I": Pattern("I", (path(4),)),
    "J": Pattern("J", (path(2), edge(), edge(), edge())),
    "K": Pattern("K", (path(3), edge(), edge())),
    "L": Pattern("L", (cycle(4), edge())),
    "O": Pattern("O", (path(4), edge())),
    "P": Pattern("P", (path(5),)),
    "Q": Pattern("Q", (path(5), edge())),
    "R": Pattern("R", (path(2), edge(), edge(), edge(), edge())),
    "S": Pattern("S", (path(3), edge(), edge(), edge())),
    "T": Pattern("T", (cycle(4), edge(), edge())),
    "U": Pattern("U", (path(4), edge(), edge())),
    "V": Pattern("V", (cycle(4), path(2))),
    "W": Pattern("W", (path(2), path(2), edge())),
}

PATTERN_NAMES = tuple(PATTERNS)


def matching_pattern(k: int) -> Pattern:
    """The pattern made of k pairwise disjoint edges."""
    return Pattern(None, tuple(edge() for _ in range(k)))


@dataclass(frozen=True)
class CountLedger:
    """All brute-force counts for one graph."""

    label: str
    class_name: str | None
    matchings: dict[int, int]
    patterns: dict[str, int]


def count_matchings(g: EmbeddedGraph, k: int) -> int:
    """Number of k-subsets of pairwise vertex-disjoint edges.

    Ordered backtracking over the canonical edge list: edges are chosen with
    increasing index and pruned on shared endpoints.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return 1
    if 2 * k > g.n:
        return 0
    edges = g.edges
    m = len(edges)
    used = bytearray(g.n)
    total = 0

    def rec(start: int, remaining: int) -> None:
        nonlocal total
        if remaining == 0:
            total += 1
            return
        # not enough edges left to finish
        for i in range(start, m - remaining + 1):
            u, v = edges[i]
            if used[u] or used[v]:
                continue
            used[u] = used[v] = 1
            rec(i + 1, remaining - 1)
            used[u] = used[v] = 0

    rec(0, k)
    return total


def _directed_path_placements(
    g: EmbeddedGraph, edges_count: int, used: bytearray
) -> list[tuple[int, ...]]:
    """All directed walks on distinct unused vertices with the given length."""
    out: list[tuple[int, ...]] = []
    rotation = g.rotation

    def extend(walk: list[int]) -> None:
        if len(walk) == edges_count + 1:
            out.append(tuple(walk))
            return
        for w in rotation[walk[-1]]:
            if not used[w] and w not in walk:
                walk.append(w)
                extend(walk)
                walk.pop()

    for v in range(g.n):
        if not used[v]:
            extend([v])
    return out


def _directed_cycle_placements(
    g: EmbeddedGraph, edges_count: int, used: bytearray
) -> list[tuple[int, ...]]:
    """All closed directed walks (every starting vertex, both directions)."""
    out: list[tuple[int, ...]] = []
    rotation = g.rotation
    nbrs = g.neighbor_sets

    def extend(walk: list[int]) -> None:
        if len(walk) == edges_count:
            if walk[0] in nbrs[walk[-1]]:
                out.append(tuple(walk))
            return
        for w in rotation[walk[-1]]:
            if not used[w] and w not in walk:
                walk.append(w)
                extend(walk)
                walk.pop()

    for v in range(g.n):
        if not used[v]:
            extend([v])
    return out


def _count_disjoint_edges(g: EmbeddedGraph, r: int, used: bytearray) -> int:
    """Matchings of size r among edges avoiding the used vertices."""
    if r == 0:
        return 1
    free_edges = [e for e in g.edges if not used[e[0]] and not used[e[1]]]
    m = len(free_edges)
    total = 0

    def rec(start: int, remaining: int) -> None:
        nonlocal total
        if remaining == 0:
            total += 1
            return
        for i in range(start, m - remaining + 1):
            u, v = free_edges[i]
            if used[u] or used[v]:
                continue
            used[u] = used[v] = 1
            rec(i + 1, remaining - 1)
            used[u] = used[v] = 0

    rec(0, r)
    return total


@lru_cache(maxsize=None)
def count_pattern(g: EmbeddedGraph, pattern: Pattern) -> int:
    """Number of subgraphs of g isomorphic to the pattern.

    Paths and cycles with at least two edges are placed as directed walks in
    a fixed component order; the remaining single edges are chosen in index
    order.  The ordered total is divided by the symmetry factor: 2 per
    multi-edge path, 2e per e-cycle, and r! for r identical multi-edge
    components.  The division must be exact.
    """
    if pattern.vertex_total > g.n:
        return 0
    big = sorted(
        (c for c in pattern.components if c[1] > 1 or c[0] == "cycle"), reverse=True
    )
    singles = len(pattern.components) - len(big)
    used = bytearray(g.n)
    total = 0

    def place(idx: int) -> None:
        nonlocal total
        if idx == len(big):
            total += _count_disjoint_edges(g, singles, used)
            return
        kind, e = big[idx]
        placements = (
            _directed_path_placements(g, e, used)
            if kind == "path"
            else _directed_cycle_placements(g, e, used)
        )
        for walk in placements:
            for v in walk:
                used[v] = 1
            place(idx + 1)
            for v in walk:
                used[v] = 0

    place(0)

    factor = prod(2 if kind == "path" else 2 * e for kind, e in big)
    factor *= prod(_factorial(r) for r in Counter(big).values())
    count, rem = divmod(total, factor)
    if rem:
        raise InexactDivision(
            f"{total} placements not divisible by symmetry factor {factor}"
        )
    return count


# --- independent oracle -----------------------------------------------------
#
# One recursive pass enumerates every edge subset of size <= max_edges in
# index order, maintaining the component shape incrementally (path endpoint
# links, closed cycles).  Subsets containing a component no catalog pattern
# can use (vertex of degree 3, cycle of length != 4, path longer than 5
# edges) are pruned wholesale: no queried shape can ever extend them.

_MAX_PATH_EDGES = 5
_ALLOWED_CYCLE = 4

_census_lock = threading.Lock()
_census_cache: dict[EmbeddedGraph, tuple[int, Counter]] = {}


def _shape_census(g: EmbeddedGraph, max_edges: int) -> Counter:
    edges = g.edges
    m = len(edges)
    deg = bytearray(g.n)
    other_end: dict[int, tuple[int, int]] = {}
    cycles: list[int] = []
    path_lengths: Counter = Counter()
    out: Counter = Counter()

    def signature() -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (tuple(sorted(cycles)), tuple(sorted(path_lengths.elements())))

    def rec(start: int, depth: int) -> None:
        out[signature()] += 1
        if depth == max_edges:
            return
        for i in range(start, m):
            u, v = edges[i]
            du, dv = deg[u], deg[v]
            if du == 2 or dv == 2:
                continue
            if du == 0 and dv == 0:
                other_end[u] = (v, 1)
                other_end[v] = (u, 1)
                path_lengths[1] += 1
                undo = 0
            elif du == 1 and dv == 1:
                ou, lu = other_end[u]
                if ou == v:
                    if lu + 1 != _ALLOWED_CYCLE:
                        continue
                    del other_end[u], other_end[v]
                    path_lengths[lu] -= 1
                    cycles.append(lu + 1)
                    undo = (1, lu)
                else:
                    ov, lv = other_end[v]
                    nl = lu + lv + 1
                    if nl > _MAX_PATH_EDGES:
                        continue
                    del other_end[u], other_end[v]
                    other_end[ou] = (ov, nl)
                    other_end[ov] = (ou, nl)
                    path_lengths[lu] -= 1
                    path_lengths[lv] -= 1
                    path_lengths[nl] += 1
                    undo = (2, ou, lu, ov, lv, nl)
            elif du == 1:
                ou, lu = other_end[u]
                if lu + 1 > _MAX_PATH_EDGES:
                    continue
                del other_end[u]
                other_end[ou] = (v, lu + 1)
                other_end[v] = (ou, lu + 1)
                path_lengths[lu] -= 1
                path_lengths[lu + 1] += 1
                undo = (3, u, v, ou, lu)
            else:
                ov, lv = other_end[v]
                if lv + 1 > _MAX_PATH_EDGES:
                    continue
                del other_end[v]
                other_end[ov] = (u, lv + 1)
                other_end[u] = (ov, lv + 1)
                path_lengths[lv] -= 1
                path_lengths[lv + 1] += 1
                undo = (3, v, u, ov, lv)
            deg[u] += 1
            deg[v] += 1
            rec(i + 1, depth + 1)
            deg[u] -= 1
            deg[v] -= 1
            if undo == 0:
                del other_end[u], other_end[v]
                path_lengths[1] -= 1
            elif undo[0] == 1:
                lu = undo[1]
                cycles.pop()
                path_lengths[lu] += 1
                other_end[u] = (v, lu)
                other_end[v] = (u, lu)
            elif undo[0] == 2:
                _, ou, lu, ov, lv, nl = undo
                path_lengths[nl] -= 1
                path_lengths[lu] += 1
                path_lengths[lv] += 1
                other_end[ou] = (u, lu)
                other_end[u] = (ou, lu)
                other_end[ov] = (v, lv)
                other_end[v] = (ov, lv)
            else:
                _, a, b, oa, la = undo
                path_lengths[la + 1] -= 1
                path_lengths[la] += 1
                other_end[oa] = (a, la)
                other_end[a] = (oa, la)
                del other_end[b]

    rec(0, 0)
    return out


def subset_shape_census(g: EmbeddedGraph, max_edges: int = 6) -> Counter:
    """Census of component-shape signatures over edge subsets of size <= max_edges.

    Results are cached per graph; a census computed for a larger size bound
    answers queries for any smaller one.
    """
    if max_edges < 0:
        raise ValueError("max_edges must be nonnegative")
    with _census_lock:
        cached = _census_cache.get(g)
    if cached is not None and cached[0] >= max_edges:
        return cached[1]
    counts = _shape_census(g, max_edges)
    with _census_lock:
        cached = _census_cache.get(g)
        if cached is None or cached[0] < max_edges:
            _census_cache[g] = (max_edges, counts)
            return counts
        return cached[1]


def brute_force_oracle(g: EmbeddedGraph, pattern: Pattern) -> int:
    """Count the pattern by classifying raw edge subsets of its size.

    Shares no code path with count_pattern.
    """
    if pattern.edge_total > 6:
        raise ValueError("the oracle only covers patterns with at most six edges")
    return subset_shape_census(g, pattern.edge_total)[pattern.signature]


def collect_counts(
    g: EmbeddedGraph,
    label: str,
    class_name: str | None = None,
    ks: tuple[int, ...] = (1, 2, 3, 4, 5, 6),
    names: tuple[str, ...] = PATTERN_NAMES,
) -> CountLedger:
    """Run the targeted counters over the requested items."""
    matchings = {k: count_matchings(g, k) for k in ks}
    patterns = {name: count_pattern(g, PATTERNS[name]) for name in names}
    return CountLedger(
        label=label, class_name=class_name, matchings=matchings, patterns=patterns
    )
