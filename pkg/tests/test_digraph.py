import pytest
from hypothesis import given

from kstrong.digraph import Digraph, DigraphError, DigraphParseError, bit_pair, pair_bit

from .conftest import cycle, digraphs


def test_new_is_empty():
    assert Digraph(3).arc_count == 0
    assert Digraph(3).n == 3
    assert Digraph(0).arc_count == 0


def test_complete_digraph_by_hand():
    d = Digraph(4)
    for u in range(4):
        for v in range(4):
            if u != v:
                d = d.add_arc(u, v)
    assert d.arc_count == 12
    assert d == Digraph.complete(4)


def test_add_arc_is_idempotent():
    d = Digraph(2).add_arc(0, 1)
    assert d.arc_count == 1
    assert d.add_arc(0, 1).arc_count == 1


@pytest.mark.parametrize("u, v", [(1, 1), (0, 2), (-1, 0)])
def test_add_arc_rejects_loops_and_range(u, v):
    with pytest.raises(DigraphError):
        Digraph(2).add_arc(u, v)


def test_complement_arcs():
    assert Digraph.complete(3).complement_arcs() == []
    assert Digraph(3).complement_arcs() == [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)]
    assert Digraph.complete(3).remove_arc(2, 0).complement_arcs() == [(2, 0)]


def test_induced():
    assert Digraph.complete(4).induced({0, 1, 2}) == Digraph.complete(3)
    assert Digraph.complete(4).induced(set()) == Digraph(0)
    assert cycle(3).induced({0, 2}) == Digraph(2, [(1, 0)])
    with pytest.raises(DigraphError):
        cycle(3).induced({5})


def test_reciprocal_degree():
    k4 = Digraph.complete(4)
    assert [k4.reciprocal_degree(v) for v in range(4)] == [3, 3, 3, 3]
    tt = Digraph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    assert tt.min_reciprocal_degree() == 0
    with pytest.raises(DigraphError):
        k4.reciprocal_degree(4)


def test_classify():
    c = Digraph.complete(3).classify()
    assert c.is_complete and not c.is_tournament
    t = Digraph(3, [(0, 1), (0, 2), (1, 2)]).classify()
    assert t.is_tournament and t.is_acyclic_tournament
    c3 = cycle(3).classify()
    assert c3.is_tournament and not c3.is_acyclic_tournament


def test_parse_and_serialize():
    d = Digraph.parse("n 2\n0 1\n")
    assert d.arcs() == [(0, 1)]
    assert Digraph(3, [(2, 0), (0, 1), (1, 0)]).serialize() == "n 3\n0 1\n1 0\n2 0\n"
    assert Digraph.parse("# comment\nn 3\n2 0\n0 1\n") == Digraph(3, [(0, 1), (2, 0)])


@pytest.mark.parametrize(
    "text, line",
    [
        ("n 2\n1 1\n", 2),
        ("n 2\n0 1\n0 1\n", 3),
        ("n 2\n0 2\n", 2),
        ("n 2\n0  1\n", 2),
        ("x 2\n", 1),
        ("n 2\n0 a\n", 2),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(DigraphParseError) as info:
        Digraph.parse(text)
    assert info.value.line == line


def test_parse_requires_header():
    with pytest.raises(DigraphParseError):
        Digraph.parse("# only a comment\n")


def test_dot_export():
    dot = Digraph(2, [(0, 1)]).to_dot()
    assert dot.startswith("digraph D {")
    assert "  0 -> 1;" in dot.splitlines()
    assert dot.count("digraph") == 1


def test_index_encoding_endpoints():
    assert Digraph.from_index(3, 0) == Digraph(3)
    assert Digraph.from_index(3, 63) == Digraph.complete(3)
    assert Digraph.from_index(3, 1).arcs() == [(0, 1)]
    for n in (2, 3, 4):
        for b in range(n * (n - 1)):
            assert pair_bit(n, *bit_pair(n, b)) == b


@given(digraphs(max_n=12))
def test_round_trip(d):
    assert Digraph.parse(d.serialize()) == d


@given(digraphs(max_n=8))
def test_arc_count_and_complement_partition_pairs(d):
    assert d.arc_count + len(d.complement_arcs()) == d.n * (d.n - 1)
    assert Digraph.from_index(d.n, d.index) == d


@given(digraphs(min_n=1, max_n=8))
def test_reciprocal_degree_bounded_by_degrees(d):
    for v in d.vertices:
        assert d.reciprocal_degree(v) <= min(d.out_degree(v), d.in_degree(v))


@given(digraphs(max_n=8))
def test_induced_on_everything_is_identity(d):
    assert d.induced(range(d.n)) == d
