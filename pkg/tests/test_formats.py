import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from graphshare.errors import ContractError, FormatError
from graphshare.formats import (
    format_graph,
    format_graph_share,
    format_set_share,
    format_shamir_share,
    parse_graph,
    parse_graph_share,
    parse_set_share,
    parse_shamir_share,
    to_dot,
)
from graphshare.graph import Graph, complete_graph
from graphshare.graphscheme import DealParams, GraphSecret, graph_deal
from graphshare.setscheme import SetShare
from graphshare.shamir import ShamirShare

from conftest import FIXTURES


def test_graph_text():
    g = Graph.from_edges([3, 1, 2], [(2, 1), (3, 2)])
    text = format_graph(g)
    assert text == "nodes: 1,2,3\nedge: 1 2\nedge: 2 3\n"
    assert parse_graph(text) == g


def test_empty_graph_text():
    text = format_graph(Graph((), frozenset()))
    assert parse_graph(text) == Graph((), frozenset())


@pytest.mark.parametrize("text, line", [
    ("nodes: 2,1\n", 1),
    ("nodes: 1,2\nedge: 2 1\n", 2),
    ("nodes: 1,2\nedge: 1 3\n", 2),
    ("nodes: 1,2,3\nedge: 2 3\nedge: 1 2\n", 3),
    ("nodes: 1,2\nedge: 1 2\nedge: 1 2\n", 3),
    ("nodes: 1,2\nedges: 1 2\n", 2),
    ("nodes: 1,x\n", 1),
    ("nodes: 1,-2\n", 1),
    ("node: 1\n", 1),
    ("nodes: 4294967296\n", 1),
])
def test_graph_parse_errors_are_positional(text, line):
    with pytest.raises(FormatError) as info:
        parse_graph(text, "x.g")
    assert info.value.line == line
    assert str(info.value).startswith(f"x.g:{line}:")


def test_crlf_rejected():
    with pytest.raises(FormatError):
        parse_graph("nodes: 1\r\n")


@given(st.sets(st.tuples(st.integers(0, 40), st.integers(0, 40))
               .filter(lambda e: e[0] != e[1])))
def test_graph_round_trip(pairs):
    nodes = {x for e in pairs for x in e} | {99}
    g = Graph.from_edges(nodes, pairs)
    text = format_graph(g)
    assert parse_graph(text) == g
    assert format_graph(parse_graph(text)) == text


def test_set_share_fixtures_round_trip():
    for i in range(1, 6):
        text = (FIXTURES / f"s{i}.sshare").read_text()
        share = parse_set_share(text)
        assert share.index == i and (share.k, share.n, share.u) == (3, 5, 3)
        assert format_set_share(share) == text


def test_set_share_errors():
    good = (FIXTURES / "s1.sshare").read_text().splitlines(keepends=True)
    with pytest.raises(FormatError) as info:
        parse_set_share("".join(good[:1] + [good[2], good[1]] + good[3:]))
    assert info.value.line == 2
    with pytest.raises(FormatError):  # unsorted elements
        parse_set_share("".join(good[:5] + [good[6], good[5]] + good[7:]))
    with pytest.raises(FormatError):  # wrong element count
        parse_set_share("".join(good[:-1]))
    with pytest.raises(FormatError):
        parse_set_share("SETSHARE v2\n")


def test_set_share_unicode_tokens():
    share = SetShare(1, 2, 2, 1, frozenset({"ключ".encode(), b"x y"}))
    assert parse_set_share(format_set_share(share)) == share
    with pytest.raises(ContractError):
        format_set_share(SetShare(1, 2, 2, 1, frozenset({b"\xff", b"a"})))


def _dealt(seed=5):
    secret = GraphSecret(("a", "b", "c"), Graph.from_edges(range(3), [(0, 2)]))
    return graph_deal(secret, DealParams(n=3, b=2), random.Random(seed))


def test_graph_share_round_trip():
    for share in _dealt():
        text = format_graph_share(share)
        again = parse_graph_share(text)
        assert again == share
        assert again.planted is None and again.secret_labels is None
        assert format_graph_share(again) == text
        assert "planted" not in text


def test_graph_share_layout():
    text = format_graph_share(_dealt()[0])
    keys = [line.split(":")[0] for line in text.splitlines()[:9]]
    assert keys == ["GRAPHSHARE v1", "scheme", "n", "c", "b", "index", "alphabet", "nodes", "edge"]


@pytest.mark.parametrize("mutate, line", [
    (lambda L: L[:2] + [L[3], L[2]] + L[4:], 3),            # n and c swapped
    (lambda L: L[:1] + ["scheme: graph-3n"] + L[2:], 2),
    (lambda L: L[:6] + ["alphabet: c,b,a"] + L[7:], 7),
    (lambda L: L[:4] + ["b: 3"] + L[5:], 8),                 # node count mismatch
    (lambda L: L[:7] + ["colour: red"] + L[7:], 8),          # unknown field
    (lambda L: L[:5] + ["index: 01"] + L[6:], 6),
])
def test_graph_share_errors(mutate, line):
    lines = format_graph_share(_dealt()[0]).splitlines()
    with pytest.raises(FormatError) as info:
        parse_graph_share("\n".join(mutate(lines)) + "\n", "s.gshare")
    assert info.value.line == line


def test_shamir_round_trip():
    share = ShamirShare(3, 12345, 2**31 - 1)
    text = format_shamir_share(share)
    assert text == "SHAMIRSHARE v1\np: 2147483647\nx: 3\ny: 12345\n"
    assert parse_shamir_share(text) == share
    with pytest.raises(FormatError):
        parse_shamir_share(text + "z: 1\n")
    with pytest.raises(FormatError):
        parse_shamir_share("SHAMIRSHARE v1\np: 31\nx: 0\ny: 1\n")


def test_dot_single_node():
    assert to_dot(Graph((0,), frozenset())) == "graph share {\n  0;\n}\n"


def test_dot_triangle():
    dot = to_dot(complete_graph([3, 1, 2]))
    assert dot.splitlines()[4:7] == ["  1 -- 2;", "  1 -- 3;", "  2 -- 3;"]


def test_dot_edge_count_matches_share():
    for share in _dealt(8):
        dot = to_dot(share.graph)
        assert dot.count(" -- ") == len(share.graph.edges)
        assert sum(1 for line in dot.splitlines() if line.strip().rstrip(";").isdigit()) == 5
