import networkx as nx

from quartic_euler.formats import embed_networkx
from quartic_euler.generation import antiprism
from quartic_euler.obstructions import (
    F6_EDGES,
    G7_TRAIL,
    MEMBERS,
    c_subgraph_at_cut,
    f6_copies,
    find_f6,
    find_f6_naive,
    is_octahedron,
)
from quartic_euler.oracle import search, SearchConfig, search_edges
from quartic_euler.plane_graph import connectivity_report
from instances import lower_connectivity_instances


def _plane(edges):
    return embed_networkx(nx.Graph(edges))


def f6_graph():
    return _plane([(e[0], e[1]) for e in F6_EDGES])


def test_f6_shape():
    g = f6_graph()
    assert (g.n, g.m) == (6, 11)
    assert sorted(g.degree(v) for v in range(g.n)) == [3, 3, 4, 4, 4, 4]
    # complement of P2 + P4
    comp = nx.complement(g.to_networkx())
    assert sorted(d for _, d in comp.degree()) == [1, 1, 1, 1, 2, 2]
    assert nx.number_connected_components(comp) == 2


def test_find_f6_examples(octahedron):
    assert find_f6(octahedron) is not None
    assert find_f6(antiprism(4)) is None
    m = find_f6(f6_graph())
    assert m is not None and set(m.values()) == set("xyabcd")


def test_find_f6_maps_edges(octahedron):
    m = find_f6(octahedron)
    for e in F6_EDGES:
        assert octahedron.has_edge(octahedron.index(m[e[0]]), octahedron.index(m[e[1]]))


def test_is_octahedron(octahedron):
    assert is_octahedron(octahedron)
    assert not is_octahedron(antiprism(4))
    assert not is_octahedron(f6_graph())


def test_agrees_with_naive_matcher(corpus):
    for gs in corpus.values():
        for g in gs:
            assert (find_f6(g) is None) == (find_f6_naive(g) is None)
    for name, g in lower_connectivity_instances()[::7]:
        if g.n <= 12:
            assert (find_f6(g) is None) == (find_f6_naive(g) is None), name


def test_f6_implies_edge_cut_or_octahedron():
    for name, g in lower_connectivity_instances():
        if find_f6(g) is not None and not is_octahedron(g):
            assert connectivity_report(g).edge_connectivity <= 2, name


def test_f6_copies_of_octahedron(octahedron):
    # one copy per missing edge, all on the same six vertices
    assert len(f6_copies(octahedron)) == 1


def test_members_trails_cover_their_edges():
    names = {m.name for m in MEMBERS}
    assert {"G7", "K4"} <= names
    for mem in MEMBERS:
        edges = {frozenset((a, b)) for a, ns in mem.adj.items() for b in ns}
        for t1, t2 in mem.trails:
            used = [frozenset(p) for t in (t1, t2) for p in zip(t, t[1:])]
            assert len(used) == len(set(used)) and set(used) == edges, mem.name


def test_g7_trail_degrees():
    g = nx.Graph(list(zip(G7_TRAIL, G7_TRAIL[1:])))
    assert g.number_of_nodes() == 7 and g.number_of_edges() == 13
    assert g.degree("x") == 3 and g.degree("y") == 3


def test_k4_at_cut():
    side = _plane([("x", "y"), ("x", "v"), ("x", "w"), ("y", "v"), ("y", "w"), ("v", "w"),
                   ("x", "sx"), ("y", "sy"), ("v", "p"), ("w", "q"), ("p", "q")])
    mem = c_subgraph_at_cut(side, "x", "y", ["sx", "sy"])
    assert mem is not None and mem.which == "K4"
    assert mem.head[0] == "x" and mem.tail[-1] == "y"
    assert {mem.exit_to, mem.enter_from} == {"p", "q"}


def test_g7_at_cut():
    edges = list(zip(G7_TRAIL, G7_TRAIL[1:])) + [("x", "sx"), ("y", "sy")]
    mem = c_subgraph_at_cut(_plane(edges), "x", "y", ["sx", "sy"])
    assert mem is not None and mem.which == "G7"
    assert mem.head[0] == "x" and len(mem.head) == len(G7_TRAIL)


def test_antiprism_minus_edge_has_no_member():
    g = antiprism(4).to_networkx()
    g.remove_edge("a", "b")
    g.add_edges_from([("a", "sa"), ("b", "sb")])
    assert c_subgraph_at_cut(embed_networkx(g), "a", "b", ["sa", "sb"]) is None


def test_f6_has_no_good_open_trail():
    labels = "xyabcd"
    edges = [(e[0], e[1]) for e in F6_EDGES]
    assert search_edges(labels, edges, SearchConfig(k=4, closed=False)) is None
    assert search(f6_graph(), SearchConfig(k=4, closed=False)) is None
