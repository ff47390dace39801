import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bnfullerene import (
    GraphError,
    GraphKind,
    generate,
    parse_graph,
    parse_kind,
    serialize_graph,
    tube_kind,
    validate_fullerene,
)
from bnfullerene.generators import GraphSyntaxError
from bnfullerene.structure import classify_structure

from helpers import CORPUS_SPECS, are_isomorphic


@pytest.mark.parametrize("t", range(7))
def test_tube_family_validates(t):
    g = generate(tube_kind(t))
    profile = validate_fullerene(g)
    assert profile.h == 3 * t
    assert profile.n == 6 * t + 8
    assert profile.m == 9 * t + 12


def test_tube0_isomorphic_to_cube():
    assert are_isomorphic(generate(tube_kind(0)), generate(parse_kind("cube")))


def test_generate_examples():
    assert generate(parse_kind("cube")).n == 8
    t3 = generate(tube_kind(3))
    assert (t3.n, t3.m) == (26, 39)
    assert generate(parse_kind("lantern-a")).n == 16
    assert generate(parse_kind("lantern-b")).n == 20


def test_lanterns_have_two_square_lines():
    for spec in ("lantern-a", "lantern-b"):
        cls = classify_structure(generate(parse_kind(spec)))
        lines = [ch for ch in cls.profile.chains if len(ch.faces) == 3]
        assert len(lines) == 2
        assert all(not ch.cyclic for ch in lines)


def test_truncated_octahedron_squares_disjoint():
    from bnfullerene import dual_square_count

    g = generate(parse_kind("truncated-octahedron"))
    assert dual_square_count(g) == 0


@pytest.mark.parametrize("spec", CORPUS_SPECS)
def test_generation_deterministic(spec):
    first = serialize_graph(generate(parse_kind(spec)))
    second = serialize_graph(generate(parse_kind(spec)))
    assert first == second


@pytest.mark.parametrize("spec", CORPUS_SPECS)
def test_serialize_parse_roundtrip(corpus, spec):
    g = corpus[spec]
    again = parse_graph(serialize_graph(g))
    assert again.rotation == g.rotation


def test_roundtrip_revalidates_tube1():
    g = parse_graph(serialize_graph(generate(tube_kind(1))))
    assert validate_fullerene(g).h == 3


def test_serialize_cube_shape():
    text = serialize_graph(generate(parse_kind("cube")))
    lines = text.strip().splitlines()
    assert lines[0] == "bnf-graph 1"
    assert lines[1] == "n 8"
    assert len(lines) == 10


def test_parse_accepts_comments_and_blanks():
    text = (
        "# a cube\nbnf-graph 1\n\nn 4  # wrong count fixed below\n"
    )
    # comments must not hide structural errors: 4 declared, 0 rows
    with pytest.raises(GraphSyntaxError):
        parse_graph(text)
    good = serialize_graph(generate(parse_kind("cube")))
    commented = "# preamble\n" + good.replace("0:", "0:", 1) + "# trailing\n"
    assert parse_graph(commented).rotation == generate(parse_kind("cube")).rotation


def test_parse_wrong_header():
    with pytest.raises(GraphSyntaxError):
        parse_graph("bnf-graph 2\nn 0\n")


def test_parse_declared_eight_but_seven_rows():
    text = serialize_graph(generate(parse_kind("cube")))
    truncated = "\n".join(text.strip().splitlines()[:-1]) + "\n"
    with pytest.raises(GraphSyntaxError):
        parse_graph(truncated)


def test_parse_id_out_of_order():
    text = "bnf-graph 1\nn 2\n1: 0 0 0\n0: 1 1 1\n"
    with pytest.raises(GraphSyntaxError):
        parse_graph(text)


def test_parse_bad_neighbour_count():
    with pytest.raises(GraphSyntaxError):
        parse_graph("bnf-graph 1\nn 1\n0: 1 2\n")


def test_parse_non_integer():
    with pytest.raises(GraphSyntaxError):
        parse_graph("bnf-graph 1\nn 1\n0: a b c\n")


def test_parse_empty():
    with pytest.raises(GraphSyntaxError):
        parse_graph("")


def test_parse_reports_line_numbers():
    err = None
    try:
        parse_graph("bnf-graph 1\nn 2\n0: 1 1 1\nbroken\n")
    except GraphSyntaxError as exc:
        err = exc
    assert err is not None and err.line == 4


@given(st.text(max_size=200))
@settings(max_examples=200)
def test_parse_never_panics(text):
    # every malformed input maps to a named error
    try:
        parse_graph(text)
    except GraphError:
        pass


def test_parse_kind_specs():
    assert parse_kind("tube:3") == tube_kind(3)
    assert parse_kind("Cube").name == "cube"
    assert parse_kind("prism").name == "hexagonal-prism"
    assert parse_kind("lantern_a") == parse_kind("lantern-a")
    with pytest.raises(ValueError):
        parse_kind("octahedron")
    with pytest.raises(ValueError):
        parse_kind("tube")
    with pytest.raises(ValueError):
        parse_kind("tube:x")
    with pytest.raises(ValueError):
        parse_kind("cube:3")
    with pytest.raises(ValueError):
        GraphKind("tube", -1)


def test_kind_spec_roundtrip():
    for spec in CORPUS_SPECS:
        assert parse_kind(spec).spec == spec
