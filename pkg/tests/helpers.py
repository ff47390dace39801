"""Shared test utilities: corpus specs, relabeling, isomorphism, fixtures."""

from __future__ import annotations

from bnfullerene import EmbeddedGraph, build_graph

CORPUS_SPECS = (
    "cube",
    "hexagonal-prism",
    "tube:1",
    "tube:2",
    "tube:3",
    "lantern-a",
    "lantern-b",
    "truncated-octahedron",
)

# Expected facts per corpus graph: h, class name, (x0, x1, x2), y, six-cycles.
CORPUS_FACTS = {
    "cube": dict(h=0, cls="cube", x=(0, 0, 0), y=12, six=16),
    "hexagonal-prism": dict(h=2, cls="hexagonal-prism", x=(0, 0, 6), y=6, six=8),
    "tube:1": dict(h=3, cls="tubular", x=(0, 0, 6), y=6, six=11),
    "tube:2": dict(h=6, cls="tubular", x=(0, 0, 6), y=6, six=15),
    "tube:3": dict(h=9, cls="tubular", x=(0, 0, 6), y=6, six=19),
    "lantern-a": dict(h=4, cls="lantern", x=(0, 4, 2), y=4, six=8),
    "lantern-b": dict(h=6, cls="lantern", x=(0, 4, 2), y=4, six=10),
    "truncated-octahedron": dict(h=8, cls="dispersive", x=(6, 0, 0), y=0, six=8),
}


def relabel(g: EmbeddedGraph, perm: list[int]) -> EmbeddedGraph:
    """Apply a vertex permutation; the embedding is carried along."""
    assert sorted(perm) == list(range(g.n))
    listing: list[tuple[int, int, int] | None] = [None] * g.n
    for v, row in enumerate(g.rotation):
        listing[perm[v]] = tuple(perm[w] for w in row)
    return build_graph(listing)


def are_isomorphic(a: EmbeddedGraph, b: EmbeddedGraph) -> bool:
    """Brute-force graph isomorphism for small graphs (ignores embedding)."""
    if a.n != b.n or a.m != b.m:
        return False
    n = a.n
    mapping = [-1] * n
    used = [False] * n

    def ok(v: int, w: int) -> bool:
        for x in a.rotation[v]:
            y = mapping[x]
            if y != -1 and y not in b.neighbor_sets[w]:
                return False
        return True

    def assign(v: int) -> bool:
        if v == n:
            return True
        for w in range(n):
            if not used[w] and ok(v, w):
                mapping[v] = w
                used[w] = True
                if assign(v + 1):
                    return True
                mapping[v] = -1
                used[w] = False
        return False

    return assign(0)


# Regular dodecahedron (12 pentagonal faces), as a counterclockwise rotation
# system; valid sphere embedding but not a (4,6)-fullerene.
DODECAHEDRON_ROTATION = (
    (10, 9, 8),
    (16, 11, 9),
    (10, 14, 12),
    (16, 12, 17),
    (8, 15, 13),
    (15, 11, 19),
    (18, 14, 13),
    (17, 18, 19),
    (0, 4, 14),
    (0, 1, 15),
    (0, 2, 16),
    (1, 17, 5),
    (3, 2, 18),
    (4, 19, 6),
    (2, 8, 6),
    (9, 5, 4),
    (1, 10, 3),
    (3, 7, 11),
    (12, 6, 7),
    (5, 7, 13),
)
