import networkx as nx
import pytest

from quartic_euler.formats import (
    HEADER,
    decode_planar_code,
    encode_planar_code,
    format_graph6,
    format_rotsys,
    parse_graph6,
    parse_rotsys,
    read_graphs,
)
from quartic_euler.plane_graph import GraphError, NotPlanar, build, canonical_code, plane_isomorphism


def test_triangle_bytes():
    g = build({1: [2, 3], 2: [3, 1], 3: [1, 2]})
    data = encode_planar_code([g])
    assert data == HEADER + bytes([3, 2, 3, 0, 3, 1, 0, 1, 2, 0])


def test_planar_code_round_trip(corpus):
    graphs = [g for n in sorted(corpus) for g in corpus[n]]
    back = list(decode_planar_code(encode_planar_code(graphs)))
    assert [g.rot for g in back] == [g.rot for g in graphs]
    assert read_graphs(encode_planar_code(graphs[:2]))[1].rot == graphs[1].rot


def test_planar_code_without_header(octahedron):
    data = encode_planar_code([octahedron], header=False)
    assert next(decode_planar_code(data)).rot == octahedron.rot


def test_rotsys_round_trip(corpus):
    for g in corpus[10]:
        text = format_rotsys(g)
        assert parse_rotsys(text).rot == g.rot
        assert read_graphs(text.encode())[0].rot == g.rot


def test_rotsys_comments_and_names():
    g = parse_rotsys("# triangle\na: b c\nb: c a  # trailing\nc: a b\n")
    assert list(g.labels) == ["a", "b", "c"]
    assert g.m == 3


@pytest.mark.parametrize("text", ["a b c\n", "a: b\na: b\nb: a\n"])
def test_rotsys_errors(text):
    with pytest.raises(GraphError):
        parse_rotsys(text)


def test_graph6_round_trip(corpus):
    for g in corpus[12]:
        h = parse_graph6(format_graph6(g))
        # 3-connected: unique embedding up to reflection
        assert plane_isomorphism(g, h) is not None or plane_isomorphism(g, h.mirror()) is not None
        assert canonical_code(h) in (canonical_code(g), canonical_code(g.mirror()))


def test_graph6_nonplanar():
    line = nx.to_graph6_bytes(nx.complete_graph(5), header=False).decode()
    with pytest.raises(NotPlanar):
        parse_graph6(line)


def test_unknown_format():
    with pytest.raises(GraphError):
        read_graphs(b"0: 1\n1: 0\n", "dimacs")
