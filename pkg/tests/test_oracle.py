import random

import pytest
from hypothesis import given, settings, strategies as st

from quartic_euler.generation import antiprism, antiprism_circuit_labels
from quartic_euler.oracle import (
    BudgetExhausted,
    SearchConfig,
    enumerate_trails,
    good_circuits,
    is_locally_self_avoiding,
    search,
    subcycles,
    verify_circuit,
    verify_trail,
    window_violation,
)
from quartic_euler.plane_graph import from_rotation


def literal_short_subcycle(seq, closed, k=4):
    """Straight from the definition: consecutive edges forming a cycle of length <= k."""
    body = list(seq[:-1]) if closed else list(seq)
    m = len(body) if closed else len(body) - 1
    for i in range(m if closed else len(body)):
        for length in range(1, k + 1):
            if not closed and i + length >= len(body):
                break
            if closed and length > m:
                break
            walk = [body[(i + j) % len(body)] if closed else body[i + j] for j in range(length + 1)]
            if walk[0] == walk[-1] and len(set(walk[:-1])) == length:
                return True
    return False


def test_antiprism_circuit_verifies():
    for k in range(4, 9):
        assert verify_circuit(antiprism(k), antiprism_circuit_labels(k))


def test_swapped_entries_fail():
    seq = antiprism_circuit_labels(4)
    bad = list(seq)
    bad[3], bad[4] = bad[4], bad[3]
    v = verify_circuit(antiprism(4), bad)
    assert not v and v.reason


def test_verify_reasons(octahedron):
    assert not verify_circuit(octahedron, ["a", "b"])
    assert "edges" in verify_trail(octahedron, ["a", "b", "c", "a"]).reason


def test_octahedron_has_no_good_circuit(octahedron):
    assert search(octahedron, SearchConfig(k=4)) is None
    assert good_circuits(octahedron, 10) == []
    survivors = []
    total = enumerate_trails(octahedron, SearchConfig(k=4), lambda t: survivors.append(t) and None, prune=False)
    assert total == 372
    assert not any(verify_circuit(octahedron, t) for t in survivors)


def test_octahedron_k3_regression(octahedron):
    t = search(octahedron, SearchConfig(k=3))
    assert t is not None and verify_circuit(octahedron, t, 3)
    assert " ".join(t.vertices) == "a b c x2 x1 y1 c a x1 b y1 x2 a"
    assert len(good_circuits(octahedron, 1000, k=3)) == 48


def test_single_edge_open_trail():
    g = from_rotation({"a": ["b"], "b": ["a"]})
    assert enumerate_trails(g, SearchConfig(k=4, closed=False), lambda t: None, prune=False) == 1


def test_budget(corpus):
    with pytest.raises(BudgetExhausted):
        search(corpus[12][0], SearchConfig(k=4, cap=5))


def test_search_complete_on_small_corpus(corpus):
    for n in (6, 8, 9, 10):
        for g in corpus[n]:
            found = search(g, SearchConfig())
            count = enumerate_trails(g, SearchConfig(), lambda t: True)
            assert (found is not None) == (count > 0)
            if found is not None:
                assert verify_circuit(g, found)


def test_deterministic(corpus):
    g = corpus[12][3]
    assert search(g).vertices == search(g).vertices


def test_start_vertex(corpus):
    g = corpus[10][0]
    t = search(g, SearchConfig(start=g.labels[4]))
    assert t.vertices[0] == g.labels[4]


def test_k_must_be_non_negative():
    with pytest.raises(ValueError):
        SearchConfig(k=-1)


@settings(max_examples=400, deadline=None)
@given(st.lists(st.integers(0, 5), min_size=2, max_size=14), st.booleans())
def test_window_check_matches_definition(seq, closed):
    # only trails without repeated edges are in scope
    if any(a == b for a, b in zip(seq, seq[1:])):
        return
    if closed:
        seq = seq + [seq[0]]
        if seq[-2] == seq[-1]:
            return
    edges = [frozenset(p) for p in zip(seq, seq[1:])]
    if len(edges) != len(set(edges)):
        return
    assert is_locally_self_avoiding(seq, closed) == (not literal_short_subcycle(seq, closed))
    assert (window_violation(seq, closed) is None) == is_locally_self_avoiding(seq, closed)


def test_subcycles_listing():
    seq = ["a", "b", "c", "a", "d", "e", "a"]
    assert subcycles(seq, closed=True)


def test_random_corpus_circuits_verify(corpus):
    rng = random.Random(5)
    for g in corpus[12]:
        for t in good_circuits(g, 5):
            assert verify_circuit(g, t)
            body = list(t.vertices[:-1])
            k = rng.randrange(len(body))
            rot = body[k:] + body[:k]
            assert verify_circuit(g, rot + [rot[0]])
            assert verify_circuit(g, (rot + [rot[0]])[::-1])
