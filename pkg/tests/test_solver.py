import networkx as nx
import pytest

from quartic_euler.formats import embed_networkx
from quartic_euler.generation import Pegging, antiprism, antiprism_circuit_labels, apply, unpeg
from quartic_euler.obstructions import G7_TRAIL, find_f6
from quartic_euler.oracle import verify_circuit, verify_trail
from quartic_euler.plane_graph import GraphError, from_rotation, plane_isomorphism
from quartic_euler.solver import (
    Disconnected,
    GoodCircuit,
    IsOctahedron,
    NotThreeEdgeConnected,
    NotTwoConnected,
    ObstructedByF6,
    Transcript,
    base_circuit,
    good_circuit,
    good_circuit_2connected,
    good_circuit_3connected,
    good_circuit_3edgeconnected,
    induced_circuit,
    lift_special_pegging,
    solve_side,
)
from quartic_euler.solver.layers import OCT_PLUS_4CYCLE_CIRCUIT
from instances import join_at_vertex, join_at_vertex_pair, join_two_edges
from sweep import lift_sweep

ANTIPRISM4_CIRCUIT = "a b c y2 y1 x1 x2 x3 c a x1 b y1 x2 y2 x3 a".split()


def _two_octahedra(octahedron):
    rot = {}
    for tag in "pq":
        rot |= {f"{tag}{k}": [f"{tag}{w}" for w in ws] for k, ws in octahedron.rotation().items()}
    return from_rotation(rot)


def _oct_plus_4cycle():
    g = nx.Graph(list(zip(OCT_PLUS_4CYCLE_CIRCUIT, OCT_PLUS_4CYCLE_CIRCUIT[1:])))
    return embed_networkx(g)


def test_antiprism4_written_circuit():
    assert antiprism_circuit_labels(4) == ANTIPRISM4_CIRCUIT
    assert verify_circuit(antiprism(4), ANTIPRISM4_CIRCUIT)


def test_base_circuits():
    for k in range(4, 8):
        g = antiprism(k)
        assert verify_circuit(g, base_circuit(g))
    g = _oct_plus_4cycle()
    assert verify_circuit(g, OCT_PLUS_4CYCLE_CIRCUIT)
    assert verify_circuit(g, base_circuit(g))


def test_outcomes(octahedron):
    assert isinstance(good_circuit(octahedron), ObstructedByF6)
    out = good_circuit(antiprism(4))
    assert isinstance(out, GoodCircuit) and verify_circuit(antiprism(4), out.trail)
    out = good_circuit(_two_octahedra(octahedron))
    assert out == Disconnected(2)


def test_obstruction_map_is_an_f6(octahedron):
    m = good_circuit(octahedron).vertex_map
    assert set(m) == set("xyabcd") and len(set(m.values())) == 6


def test_3connected_corpus(corpus):
    for n, gs in corpus.items():
        for g in gs:
            if n == 6:
                with pytest.raises(IsOctahedron):
                    good_circuit_3connected(g)
                continue
            assert verify_circuit(g, good_circuit_3connected(g))


def test_3connected_rejects_lower_connectivity():
    g = join_at_vertex_pair(antiprism(4), 0, antiprism(4), 0)
    with pytest.raises(GraphError):
        good_circuit_3connected(g)


def test_type_a_between_two_antiprisms():
    g = join_at_vertex_pair(antiprism(4), 0, antiprism(4), 0)
    tr = Transcript()
    c = good_circuit_3edgeconnected(g, tr)
    assert verify_circuit(g, c)
    assert "side" in tr.text()


def test_3edgeconnected_preconditions(octahedron):
    with pytest.raises(IsOctahedron):
        good_circuit_3edgeconnected(octahedron)
    g = join_two_edges(antiprism(4), (0, antiprism(4).rot[0][0]), antiprism(4), (0, antiprism(4).rot[0][0]))
    with pytest.raises(NotThreeEdgeConnected):
        good_circuit_3edgeconnected(g)


def test_2connected_with_f6(octahedron):
    e = (0, octahedron.rot[0][0])
    g = join_two_edges(octahedron, e, antiprism(4), (0, antiprism(4).rot[0][0]))
    assert isinstance(good_circuit_2connected(g), ObstructedByF6)


def test_2connected_glued_antiprisms():
    a4 = antiprism(4)
    g = join_two_edges(a4, (0, a4.rot[0][0]), a4, (2, a4.rot[2][1]))
    out = good_circuit_2connected(g)
    assert isinstance(out, GoodCircuit) and verify_circuit(g, out.trail)


def test_2connected_rejects_cutvertex():
    a4 = antiprism(4)
    g = join_at_vertex(a4, (0, a4.rot[0][0]), a4, (0, a4.rot[0][0]))
    with pytest.raises(NotTwoConnected):
        good_circuit_2connected(g)


def test_g7_side():
    edges = list(zip(G7_TRAIL, G7_TRAIL[1:])) + [("x", "sx"), ("y", "sy")]
    s = embed_networkx(nx.Graph(edges))
    trail = solve_side(s, "x", "y", ["sx", "sy"])
    assert trail[0] == "x" and trail[-1] == "y"
    g7 = embed_networkx(nx.Graph(list(zip(G7_TRAIL, G7_TRAIL[1:]))))
    assert verify_trail(g7, trail, closed=False)
    assert verify_trail(g7, list(G7_TRAIL), closed=False)


def test_special_pegging_of_independent_cut():
    a4 = antiprism(4)
    small = join_two_edges(a4, (0, a4.rot[0][0]), a4, (3, a4.rot[3][2]))
    circ = good_circuit(small).trail.vertices
    cut = [(u, v) for u, v in small.edges()
           if str(small.labels[u])[0] != str(small.labels[v])[0]]
    (p, q), (r, s) = cut
    L = small.labels
    big = op = None
    for a, b, c, d in ((L[p], L[q], L[r], L[s]), (L[p], L[q], L[s], L[r]),
                       (L[q], L[p], L[r], L[s]), (L[q], L[p], L[s], L[r])):
        try:
            op = Pegging(a, b, c, d, "u", special=True)
            big = apply(small, op)
            break
        except GraphError:
            continue
    assert big is not None
    lifted = lift_special_pegging(circ, small, big, op)
    assert verify_circuit(big, lifted)
    assert lifted.vertices == induced_circuit(circ, op)
    # unpegging gives the glued graph back
    back = [unpeg(big, "u", k, special=True) for k in (0, 1)]
    assert any(st is not None and plane_isomorphism(st.reduced, small) for st in back)


def test_lifts_small_sweep():
    res = lift_sweep(9, cap=10)
    assert res.lifts > 500
    assert not res.failures and not res.exhaustion


def test_transcript_records_steps(corpus):
    tr = Transcript()
    good_circuit(corpus[12][5], tr)
    assert tr.text().strip()


def test_f6_free_means_circuit(corpus):
    for gs in corpus.values():
        for g in gs:
            out = good_circuit(g)
            assert isinstance(out, ObstructedByF6) == (find_f6(g) is not None)
