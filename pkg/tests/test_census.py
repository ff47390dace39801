import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bnfullerene import (
    PATTERNS,
    Pattern,
    brute_force_oracle,
    count_matchings,
    count_pattern,
    generate,
    matching_pattern,
    parse_kind,
)

from helpers import relabel

SMALL_SPECS = ("cube", "hexagonal-prism", "tube:1", "lantern-a")

# expected component multisets: (kind, edge count) pairs
CATALOG_SHAPE = {
    "C": [("path", 3)],
    "D": [("path", 2), ("path", 1), ("path", 1)],
    "E": [("path", 3), ("path", 1)],
    "H": [("cycle", 4)],
    "I": [("path", 4)],
    "J": [("path", 2)] + [("path", 1)] * 3,
    "K": [("path", 3), ("path", 1), ("path", 1)],
    "L": [("cycle", 4), ("path", 1)],
    "O": [("path", 4), ("path", 1)],
    "P": [("path", 5)],
    "Q": [("path", 5), ("path", 1)],
    "R": [("path", 2)] + [("path", 1)] * 4,
    "S": [("path", 3)] + [("path", 1)] * 3,
    "T": [("cycle", 4), ("path", 1), ("path", 1)],
    "U": [("path", 4), ("path", 1), ("path", 1)],
    "V": [("cycle", 4), ("path", 2)],
    "W": [("path", 2), ("path", 2), ("path", 1)],
}


def test_catalog_shapes():
    assert set(PATTERNS) == set(CATALOG_SHAPE)
    for name, comps in CATALOG_SHAPE.items():
        assert PATTERNS[name].components == tuple(sorted(comps))
        assert PATTERNS[name].edge_total <= 6


def test_pattern_symmetries():
    assert PATTERNS["C"].automorphism_count == 2
    assert PATTERNS["H"].automorphism_count == 8
    assert PATTERNS["D"].automorphism_count == 2 * 2 * 2 * 2  # two identical edges
    assert PATTERNS["W"].automorphism_count == 2 * 2 * 2 * 2  # two identical path(2)
    assert PATTERNS["T"].automorphism_count == 8 * 2 * 2 * 2
    assert matching_pattern(3).automorphism_count == 2 ** 3 * 6


def test_pattern_vertex_totals():
    assert PATTERNS["Q"].vertex_total == 8
    assert PATTERNS["J"].vertex_total == 9
    assert PATTERNS["R"].vertex_total == 11
    assert PATTERNS["W"].vertex_total == 8


def test_bad_pattern_components():
    with pytest.raises(ValueError):
        Pattern(None, (("path", 0),))
    with pytest.raises(ValueError):
        Pattern(None, (("cycle", 2),))
    with pytest.raises(ValueError):
        Pattern(None, (("loop", 3),))


def test_matching_examples(cube, prism, tube1):
    assert count_matchings(cube, 4) == 9
    assert count_matchings(cube, 5) == 0
    assert count_matchings(cube, 6) == 0
    assert count_matchings(prism, 6) == 20
    assert count_matchings(tube1, 2) == 168


def test_matching_vanishes_beyond_half_n(cube):
    for k in range(5, 9):
        assert count_matchings(cube, k) == 0


def test_pattern_examples(cube):
    assert count_pattern(cube, PATTERNS["H"]) == 6
    assert count_pattern(cube, PATTERNS["C"]) == 48
    assert count_pattern(cube, PATTERNS["T"]) == 12
    assert count_pattern(cube, PATTERNS["J"]) == 0


def test_oracle_examples(cube, tube1):
    assert brute_force_oracle(cube, PATTERNS["P"]) == 120
    assert brute_force_oracle(cube, PATTERNS["V"]) == 24
    assert brute_force_oracle(tube1, PATTERNS["K"]) == 4176


def test_oracle_rejects_oversized_patterns(cube):
    too_big = Pattern(None, tuple([("path", 1)] * 7))
    with pytest.raises(ValueError):
        brute_force_oracle(cube, too_big)


@pytest.mark.parametrize("spec", SMALL_SPECS)
def test_oracle_equivalence(corpus, spec):
    g = corpus[spec]
    for name, pattern in PATTERNS.items():
        assert count_pattern(g, pattern) == brute_force_oracle(g, pattern), name


@pytest.mark.parametrize("spec", SMALL_SPECS)
def test_matching_pattern_consistency(corpus, spec):
    g = corpus[spec]
    for k in range(1, 7):
        expected = count_matchings(g, k)
        assert brute_force_oracle(g, matching_pattern(k)) == expected
        assert count_pattern(g, matching_pattern(k)) == expected


def test_monotone_vanishing(cube):
    for name, pattern in PATTERNS.items():
        if pattern.vertex_total > cube.n:
            assert count_pattern(cube, pattern) == 0, name
            assert brute_force_oracle(cube, pattern) == 0, name


def test_counts_independent_of_labels(cube, tube1):
    rng = random.Random(401)
    for g in (cube, tube1):
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = relabel(g, perm)
        for name in ("C", "H", "P", "Q", "W", "T"):
            assert count_pattern(h, PATTERNS[name]) == count_pattern(g, PATTERNS[name])
            assert brute_force_oracle(h, PATTERNS[name]) == count_pattern(g, PATTERNS[name])


@given(data=st.data())
@settings(max_examples=30, deadline=None)
def test_cube_counts_relabeling_property(data):
    g = generate(parse_kind("cube"))
    perm = data.draw(st.permutations(range(g.n)))
    h = relabel(g, list(perm))
    name = data.draw(st.sampled_from(("C", "D", "H", "P", "Q", "V", "W")))
    assert count_pattern(h, PATTERNS[name]) == count_pattern(g, PATTERNS[name])
    assert brute_force_oracle(h, PATTERNS[name]) == count_pattern(g, PATTERNS[name])
