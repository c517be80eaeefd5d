import random

import networkx as nx
import pytest

from quartic_euler.decomposer import (
    F6_CIRCUITS,
    OCTAHEDRON_CIRCUITS,
    OCTAHEDRON_FALLBACK,
    BadLengths,
    DisconnectedGraph,
    LengthMismatch,
    PathDecomposition,
    StartVertexAbsent,
    UnderlinedPattern,
    cut_circuit,
    f6_decomposition,
    is_subdivision,
    octahedron_decomposition,
    p_decomposition,
    verify_decomposition,
)
from quartic_euler.formats import embed_networkx
from quartic_euler.generation import antiprism, antiprism_circuit_labels
from quartic_euler.obstructions import F6_EDGES, find_f6
from quartic_euler.oracle import verify_trail
from quartic_euler.plane_graph import from_rotation
from instances import join_two_edges, lower_connectivity_instances
from lengths import compositions, n_compositions, random_composition

PAT = UnderlinedPattern.parse("3,_4,4")


def f6():
    return embed_networkx(nx.Graph([(e[0], e[1]) for e in F6_EDGES]))


def octahedron_std():
    g = nx.Graph([(e[0], e[1]) for e in F6_EDGES] + [("x", "y")])
    return embed_networkx(g)


def test_subdivision_examples():
    assert is_subdivision((1, 2, 4, 4), PAT)
    assert is_subdivision((1, 1, 1, 4, 3, 1), PAT)
    assert not is_subdivision((3, 2, 2, 4), PAT)
    assert is_subdivision((3, 4, 4), UnderlinedPattern((3, 4, 4)))
    assert not is_subdivision((3, 4, 3), PAT)


def test_pattern_parse():
    assert PAT == UnderlinedPattern((3, 4, 4), frozenset({1}))


def test_composition_helpers():
    assert n_compositions(11) == len(list(compositions(11))) == 773
    rng = random.Random(0)
    for _ in range(50):
        c = random_composition(rng, 17)
        assert sum(c) == 17 and max(c) <= 4


def test_cut_antiprism_into_p5():
    g = antiprism(4)
    d = cut_circuit(antiprism_circuit_labels(4), [4, 4, 4, 4], "a")
    assert d.lengths() == (4, 4, 4, 4)
    assert all(len(set(p)) == 5 for p in d.paths)
    assert verify_decomposition(g, d, [4, 4, 4, 4], "a")


def test_cut_unit_lengths():
    seq = antiprism_circuit_labels(4)
    d = cut_circuit(seq, [1] * 16, "a")
    assert d.circuit() == tuple(seq)


def test_cut_errors():
    seq = antiprism_circuit_labels(4)
    with pytest.raises(LengthMismatch):
        cut_circuit(seq, [4, 4, 4], "a")
    with pytest.raises(StartVertexAbsent):
        cut_circuit(seq, [4] * 4, "nope")
    with pytest.raises(BadLengths):
        cut_circuit(seq, [5, 4, 4, 3], "a")


def test_f6_circuit_choice():
    assert f6_decomposition([3, 4, 4]).circuit() == tuple(F6_CIRCUITS[0])
    assert f6_decomposition([4, 4, 3]).circuit() == tuple(F6_CIRCUITS[1])


def test_f6_all_lengths():
    g = f6()
    count = 0
    for L in compositions(11):
        d = f6_decomposition(L)
        assert d.lengths() == L
        assert d.paths[0][0] == "x" and d.paths[-1][-1] == "y"
        assert all(len(set(p)) == len(p) for p in d.paths)
        assert verify_trail(g, d.circuit(), k=0, closed=False)
        count += 1
    assert count == 773


def test_f6_bad_lengths():
    with pytest.raises(BadLengths):
        f6_decomposition([5, 6])
    with pytest.raises(LengthMismatch):
        f6_decomposition([4, 4])


def test_octahedron_circuit_choice():
    assert octahedron_decomposition([3, 4, 4, 1]).circuit() == tuple(OCTAHEDRON_CIRCUITS[0])
    assert octahedron_decomposition([1, 4, 4, 3]).circuit() == tuple(OCTAHEDRON_CIRCUITS[1])
    assert octahedron_decomposition([4, 4, 4]).circuit() == tuple(OCTAHEDRON_FALLBACK)


def test_octahedron_all_lengths_all_starts():
    g = octahedron_std()
    for L in compositions(12):
        for v in "xyabcd":
            d = octahedron_decomposition(L, v)
            assert verify_decomposition(g, d, L, v), (L, v)


def test_verify_rejects_repeated_edge():
    g = antiprism(4)
    d = cut_circuit(antiprism_circuit_labels(4), [4, 4, 4, 4], "a")
    p = list(d.paths)
    p[1] = p[0][-1:] + p[0][-2::-1][:4]
    assert not verify_decomposition(g, PathDecomposition(tuple(p), "a"))


def test_verify_checks_concatenation():
    g = antiprism(4)
    d = cut_circuit(antiprism_circuit_labels(4), [4, 4, 4, 4], "a")
    bad = PathDecomposition(d.paths[:2] + d.paths[3:], "a")
    v = verify_decomposition(g, bad)
    assert not v and v.reason


def test_p5_on_even_corpus(corpus):
    for n, gs in corpus.items():
        if n % 2:
            continue
        for g in gs:
            d = p_decomposition(g, [4] * (g.m // 4), g.labels[0])
            assert verify_decomposition(g, d)


def test_mixed_counts(corpus):
    # k1 + 2 k2 + 3 k3 + 4 k4 = 2n in any order
    rng = random.Random(3)
    for g in corpus[11]:
        for _ in range(30):
            L = random_composition(rng, g.m)
            v = rng.choice(g.labels)
            assert verify_decomposition(g, p_decomposition(g, L, v), L, v)


def test_graphs_with_f6_copies():
    rng = random.Random(8)
    checked = 0
    for name, g in lower_connectivity_instances()[:120]:
        if find_f6(g) is None:
            continue
        for _ in range(25):
            L = random_composition(rng, g.m)
            v = rng.choice(g.labels)
            assert verify_decomposition(g, p_decomposition(g, L, v), L, v), name
        checked += 1
    assert checked > 10


def test_start_on_every_f6_vertex():
    oct_ = antiprism(3)
    a4 = antiprism(4)
    g = join_two_edges(oct_, (0, oct_.rot[0][0]), a4, (0, a4.rot[0][0]))
    m = find_f6(g)
    for L in ([4] * (g.m // 4), [1] + [4] * ((g.m - 4) // 4) + [3], [3, 2] + [1] * (g.m - 5)):
        for v in m.values():
            assert verify_decomposition(g, p_decomposition(g, L, v), L, v)


def test_errors(octahedron):
    g = antiprism(4)
    with pytest.raises(LengthMismatch):
        p_decomposition(g, [4, 4, 4, 4, 4], "a")
    with pytest.raises(BadLengths):
        p_decomposition(g, [8, 8], "a")
    with pytest.raises(StartVertexAbsent):
        p_decomposition(g, [4] * 4, "zz")
    rot = {}
    for tag in "pq":
        rot |= {f"{tag}{k}": [f"{tag}{w}" for w in ws] for k, ws in octahedron.rotation().items()}
    two = from_rotation(rot)
    with pytest.raises(DisconnectedGraph):
        p_decomposition(two, [4] * 6, two.labels[0])


def test_str_one_path_per_line():
    d = cut_circuit(antiprism_circuit_labels(4), [4, 4, 4, 4], "a")
    assert str(d).count("\n") == 3
