import io

import pytest
from hypothesis import given

from mdpart import Multigraph, ParseError, format_edge_list, graph_digest, parse_edge_list, read_edge_list

from conftest import multigraphs


def test_parse_basic():
    text = "# tiny\nn 4\n0 1 3   # heavy\n1 2\n\n2 1 2\n"
    G = parse_edge_list(text)
    assert G.n == 4
    assert G.edges() == [(0, 1, 3), (1, 2, 3)]


def test_read_from_stream():
    assert read_edge_list(io.StringIO("n 2\n0 1\n")) == Multigraph(2, [(0, 1)])


def test_header_only():
    assert parse_edge_list("n 3").edges() == []


@pytest.mark.parametrize(
    "text,line",
    [
        ("0 1\n", 1),
        ("n x\n", 1),
        ("n 3\n0 1 2 4\n", 2),
        ("n 3\n0 3\n", 2),
        ("# c\nn 3\n1 1\n", 3),
        ("n 3\n0 1 0\n", 2),
        ("n 3\n0 a\n", 2),
        ("n -1\n", 1),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as info:
        parse_edge_list(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_missing_header():
    with pytest.raises(ParseError, match="missing header"):
        parse_edge_list("# nothing\n")


@given(multigraphs())
def test_round_trip(G):
    text = format_edge_list(G, "generated")
    assert parse_edge_list(text) == G
    assert format_edge_list(parse_edge_list(text)) == format_edge_list(G)


def test_digest_ignores_input_layout():
    a = parse_edge_list("n 3\n0 1\n0 1\n2 1\n")
    b = parse_edge_list("# other order\nn 3\n1 2 1\n1 0 2\n")
    assert graph_digest(a) == graph_digest(b)
    assert graph_digest(a) != graph_digest(Multigraph(3, [(0, 1)]))
