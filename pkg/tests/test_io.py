import pytest
from hypothesis import given

from ilth import FormatError, Graph, format_hgf, parse_edge_list, parse_hgf, read_hgf, write_hgf
from ilth.io import format_edge_list

from conftest import hypergraphs


def test_parse_with_comments_and_blanks():
    h = parse_hgf("# a comment\n3 4 2\n\n0 1 2\n# between\n1 2 3\n")
    assert (h.k, h.n, h.edges) == (3, 4, ((0, 1, 2), (1, 2, 3)))


def test_format_exact_text():
    h = parse_hgf("3 4 2\n0 1 2\n1 2 3\n")
    assert format_hgf(h) == "3 4 2\n0 1 2\n1 2 3\n"
    assert format_hgf(h, comment="x").startswith("# x\n")


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("", 1, 1),
        ("3 4\n", 1, 1),
        ("3 4 1\n0 1 x\n", 2, 5),
        ("3 4 1\n0 2 1\n", 2, 1),
        ("3 4 1\n0 1\n", 2, 1),
        ("3 4 2\n0 1 2\n", 2, 1),
        ("3 4 2\n0 1 2\n0 1 2\n", 3, 1),
        ("3 4 1\n0 1 9\n", 2, 1),
    ],
)
def test_errors_report_position(text, line, column):
    with pytest.raises(FormatError) as info:
        parse_hgf(text)
    assert (info.value.line, info.value.column) == (line, column)
    assert f"line {line}" in str(info.value)


@given(hypergraphs())
def test_hgf_round_trip(h):
    assert parse_hgf(format_hgf(h)) == h


def test_file_round_trip(tmp_path):
    h = parse_hgf("4 6 2\n0 1 2 3\n2 3 4 5\n")
    path = tmp_path / "h.hgf"
    write_hgf(h, str(path))
    assert path.read_bytes().count(b"\r") == 0
    assert read_hgf(str(path)) == h
    with open(path) as fh:
        assert read_hgf(fh) == h


def test_edge_list_round_trip():
    g = parse_edge_list("# c5\n5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    assert g == Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    assert parse_edge_list(format_edge_list(g)) == g


@pytest.mark.parametrize("text", ["2 1\n0 0\n", "2 1\n0 2\n", "2 2\n0 1\n", "2\n", "2 1\n0 1 1\n"])
def test_edge_list_errors(text):
    with pytest.raises(FormatError):
        parse_edge_list(text)
