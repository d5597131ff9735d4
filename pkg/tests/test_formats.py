import string

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclerank import EdgeList, GraphFormatError, build_graph, parse, serialize
from cyclerank.formats import (
    detect_format,
    parse_asd,
    parse_edgelist,
    parse_pajek,
    write_asd,
    write_edgelist,
    write_pajek,
)

from conftest import graph_from_edges, labeled_graph, random_edge_set


# --- edgelist ---------------------------------------------------------------

def test_edgelist_basic():
    el = parse_edgelist("a,b\nb,a\n")
    assert el.edges == [("a", "b"), ("b", "a")]
    assert el.declared_node_count is None


def test_edgelist_skips_blanks_and_comments():
    el = parse_edgelist("a,b\n\n# c\nb,c\n")
    assert el.edges == [("a", "b"), ("b", "c")]


def test_edgelist_malformed_row_reports_line():
    with pytest.raises(GraphFormatError) as err:
        parse_edgelist("a,b,c\n")
    assert err.value.line == 1


def test_edgelist_empty_field_rejected():
    with pytest.raises(GraphFormatError) as err:
        parse_edgelist("a,b\n ,b\n")
    assert err.value.line == 2


def test_edgelist_trims_whitespace():
    assert parse_edgelist("  a , b \n").edges == [("a", "b")]


# --- pajek ------------------------------------------------------------------

def test_pajek_minimal_arc_file():
    el = parse_pajek('*Vertices 2\n1 "x"\n2 "y"\n*Arcs\n1 2\n')
    assert el.edges == [("x", "y")]
    assert el.declared_node_count == 2
    assert el.declared_labels == ["x", "y"]


def test_pajek_undirected_section_expands_both_ways():
    el = parse_pajek("*Vertices 2\n*Edges\n1 2\n")
    assert el.edges == [("1", "2"), ("2", "1")]
    assert el.declared_node_count == 2


def test_pajek_missing_header_rejected():
    with pytest.raises(GraphFormatError):
        parse_pajek("*Arcs\n1 2\n")


def test_pajek_case_insensitive_sections_and_default_labels():
    el = parse_pajek("*VERTICES 3\n*arcs\n1 2\n2 3\n")
    assert el.declared_labels == ["1", "2", "3"]
    assert el.edges == [("1", "2"), ("2", "3")]


def test_pajek_vertex_id_out_of_range():
    with pytest.raises(GraphFormatError) as err:
        parse_pajek("*Vertices 2\n*Arcs\n1 5\n")
    assert err.value.line == 3


def test_pajek_quoted_label_with_spaces():
    el = parse_pajek('*Vertices 1\n1 "Fake news"\n')
    assert el.declared_labels == ["Fake news"]


def test_pajek_duplicate_labels_rejected():
    with pytest.raises(GraphFormatError):
        parse_pajek('*Vertices 2\n1 "x"\n2 "x"\n')


# --- asd --------------------------------------------------------------------

def test_asd_minimal_file():
    el = parse_asd("3 2\n0 1\n1 2\n")
    assert el.edges == [("0", "1"), ("1", "2")]
    assert el.declared_node_count == 3


def test_asd_index_out_of_range():
    with pytest.raises(GraphFormatError) as err:
        parse_asd("2 1\n0 5\n")
    assert err.value.line == 2


def test_asd_edge_count_mismatch():
    with pytest.raises(GraphFormatError):
        parse_asd("2 2\n0 1\n")
    with pytest.raises(GraphFormatError):
        parse_asd("2 1\n0 1\n1 0\n")


def test_asd_isolated_nodes_survive():
    g = build_graph(parse_asd("4 1\n0 1\n"))
    assert g.node_count == 4
    assert g.labels == ("0", "1", "2", "3")


# --- shared behavior ----------------------------------------------------------

@pytest.mark.parametrize(
    "fmt,text",
    [
        ("edgelist", "a,b\r\nb,a\r\n"),
        ("pajek", '*Vertices 2\r\n1 "a"\r\n2 "b"\r\n*Arcs\r\n1 2\r\n'),
        ("asd", "2 1\r\n0 1\r\n"),
    ],
)
def test_crlf_line_endings_accepted(fmt, text):
    g = parse(text, fmt)
    assert g.edge_count >= 1


def test_parser_determinism():
    text = "a,b\nb,c\nc,a\n"
    assert parse(text, "edgelist") == parse(text, "edgelist")


def test_detect_format():
    assert detect_format("x.csv") == "edgelist"
    assert detect_format("x.net") == "pajek"
    assert detect_format("x.asd") == "asd"
    with pytest.raises(ValueError):
        detect_format("x.bin")


def test_unknown_format_rejected():
    with pytest.raises(ValueError):
        parse("a,b\n", "graphml")


# --- round-trips --------------------------------------------------------------

def _random_labels(rng: np.random.Generator, n: int) -> list[str]:
    alphabet = string.ascii_letters + string.digits + " _-"
    labels = set()
    while len(labels) < n:
        size = int(rng.integers(1, 10))
        lab = "".join(rng.choice(list(alphabet), size=size)).strip()
        if lab and not lab.startswith("#"):
            labels.add(lab)
    return sorted(labels)


def test_round_trip_all_formats_random_graphs():
    rng = np.random.default_rng(2024)
    for trial in range(60):
        n = int(rng.integers(1, 12))
        edges = random_edge_set(rng, n, 0.3, self_loops=True)

        g_asd = graph_from_edges(n, edges)
        assert parse(write_asd(g_asd), "asd") == g_asd

        assert parse(write_pajek(g_asd), "pajek") == g_asd
        names = _random_labels(rng, n)
        g_named = build_graph(
            EdgeList(
                edges=[(names[u], names[v]) for u, v in edges], declared_labels=names
            )
        )
        assert parse(write_pajek(g_named), "pajek") == g_named

        if edges:  # edgelist cannot carry isolated nodes
            g_el = labeled_graph([(names[u], names[v]) for u, v in edges])
            back = parse(write_edgelist(g_el), "edgelist")
            # the format carries no node order, so identity is the
            # labeled edge set, not index assignment
            assert back.labeled_edges() == g_el.labeled_edges()
            assert set(back.labels) == set(g_el.labels)


def test_write_asd_requires_canonical_labels():
    with pytest.raises(ValueError):
        write_asd(labeled_graph([("a", "b")]))


def test_write_edgelist_rejects_bad_labels():
    with pytest.raises(ValueError):
        write_edgelist(labeled_graph([("a,b", "c")]))


def test_write_pajek_rejects_quotes():
    with pytest.raises(ValueError):
        write_pajek(labeled_graph([('say "hi"', "c")]))


@settings(max_examples=60, deadline=None)
@given(
    st.lists(
        st.tuples(st.integers(0, 6), st.integers(0, 6)), min_size=0, max_size=20
    ),
    st.integers(7, 9),
)
def test_round_trip_property_pajek_asd(edge_pairs, n):
    g = graph_from_edges(n, edge_pairs)
    assert parse(write_pajek(g), "pajek") == g
    assert parse(write_asd(g), "asd") == g
    assert serialize(g, "asd") == write_asd(g)
