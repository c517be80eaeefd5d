"""Constructed quartic plane graphs of lower connectivity.

Small members of the 3-connected class (and the octahedron) are glued
across a 2-edge-cut, by a special pegging (giving a cutvertex) or across a
2-vertex-cut.  Sides of the 2-vertex-cut gluings are also completed back
into quartic graphs.  Gluing the octahedron minus an edge leaves an F6
behind, so both outcomes appear.
"""

from __future__ import annotations

from itertools import islice, permutations

from quartic_euler.generation import generate
from quartic_euler.plane_graph import (
    CutType,
    GraphError,
    PlaneGraph,
    complete_into_quartic,
    connectivity_report,
    euler_ok,
    from_rotation,
    induced_subgraph,
    split_vertex,
)


def _tagged(g: PlaneGraph, tag: str) -> dict:
    return {f"{tag}{k}": [f"{tag}{w}" for w in ws] for k, ws in g.rotation().items()}


def _swap(rot: dict, v, old, new) -> None:
    r = rot[v]
    r[r.index(old)] = new


def _planar(rot: dict) -> PlaneGraph | None:
    g = from_rotation(rot)
    return g if euler_ok(g) else None


def join_two_edges(g1: PlaneGraph, e1: tuple, g2: PlaneGraph, e2: tuple) -> PlaneGraph | None:
    """Delete ``e1`` and ``e2`` and reconnect their ends across."""
    for h2 in (g2, g2.mirror()):
        rot = _tagged(g1, "p") | _tagged(h2, "q")
        x1, y1 = (f"p{g1.labels[v]}" for v in e1)
        x2, y2 = (f"q{g2.labels[v]}" for v in e2)
        _swap(rot, x1, y1, x2)
        _swap(rot, y1, x1, y2)
        _swap(rot, x2, y2, x1)
        _swap(rot, y2, x2, y1)
        g = _planar(rot)
        if g is not None:
            return g
    return None


def join_at_vertex(g1: PlaneGraph, e1: tuple, g2: PlaneGraph, e2: tuple) -> PlaneGraph | None:
    """Special pegging of ``e1`` and ``e2`` across the two graphs.

    Both edges are subdivided and the new vertices identified, which makes
    the new vertex a cutvertex.
    """
    base = _tagged(g1, "p") | _tagged(g2, "q")
    a1, b1 = (f"p{g1.labels[v]}" for v in e1)
    a2, b2 = (f"q{g2.labels[v]}" for v in e2)
    for order in ([a1, b1, a2, b2], [a1, b1, b2, a2]):
        rot = {k: list(v) for k, v in base.items()}
        _swap(rot, a1, b1, "w")
        _swap(rot, b1, a1, "w")
        _swap(rot, a2, b2, "w")
        _swap(rot, b2, a2, "w")
        rot["w"] = order
        g = _planar(rot)
        if g is not None:
            return g
    return None


def join_at_vertex_pair(g1: PlaneGraph, v1: int, g2: PlaneGraph, v2: int) -> PlaneGraph | None:
    """Delete ``v1`` and ``v2``; two new vertices each take two ends from either side."""
    base = _tagged(g1, "p") | _tagged(g2, "q")
    n1 = [f"p{g1.labels[w]}" for w in g1.rot[v1]]
    n2 = [f"q{g2.labels[w]}" for w in g2.rot[v2]]
    c1, c2 = f"p{g1.labels[v1]}", f"q{g2.labels[v2]}"
    for k in range(4):
        m = n2[k:] + n2[:k]
        rot = {a: list(b) for a, b in base.items() if a not in (c1, c2)}
        for w in n1[:2]:
            _swap(rot, w, c1, "x")
        for w in n1[2:]:
            _swap(rot, w, c1, "y")
        for w in m[:2]:
            _swap(rot, w, c2, "x")
        for w in m[2:]:
            _swap(rot, w, c2, "y")
        for rx in permutations(n1[:2] + m[:2]):
            if rx[0] != n1[0]:
                continue
            for ry in permutations(n1[2:] + m[2:]):
                if ry[0] != n1[2]:
                    continue
                rot["x"], rot["y"] = list(rx), list(ry)
                g = _planar(rot)
                if g is not None:
                    return g
    return None


def complete_side(g: PlaneGraph) -> list[PlaneGraph]:
    """Both sides of the first type (a) 2-vertex-cut, each made quartic again."""
    for cut in connectivity_report(g).two_vertex_cuts:
        if cut.kind is not CutType.A:
            continue
        x, y = (g.labels[v] for v in cut.vertices)
        out = []
        for side in (cut.side_a, cut.side_b):
            a = induced_subgraph(g, side)
            w, _ = split_vertex(a, x, ["x_0", "x_1"])
            w, _ = split_vertex(w, y, ["y_0", "y_1"])
            try:
                out.append(complete_into_quartic(w, "z")[0])
            except GraphError:
                pass
        return out
    return []


def _pieces() -> list[PlaneGraph]:
    corpus = generate(9)
    return [g for n in sorted(corpus) for g in corpus[n]]


def lower_connectivity_instances(limit: int | None = None) -> list[tuple[str, PlaneGraph]]:
    """Deterministic list of glued and completed instances, optionally truncated."""
    pieces = _pieces()
    out: list[tuple[str, PlaneGraph]] = []
    seen = set()

    def add(name, g):
        if g is None:
            return
        key = (g.n, tuple(sorted(tuple(sorted(r)) for r in g.rot)))
        if key in seen:
            return
        seen.add(key)
        out.append((name, g))

    for i, g1 in enumerate(pieces):
        for j, g2 in enumerate(pieces):
            if j < i:
                continue
            for s, e1 in enumerate(islice(g1.edges(), 0, None, 2)):
                for t, e2 in enumerate(islice(g2.edges(), 0, None, 3)):
                    add(f"edge-{i}-{j}-{s}-{t}", join_two_edges(g1, e1, g2, e2))
                    if t < 2:
                        add(f"peg-{i}-{j}-{s}-{t}", join_at_vertex(g1, e1, g2, e2))
            for v1 in range(min(g1.n, 3)):
                for v2 in range(min(g2.n, 3)):
                    h = join_at_vertex_pair(g1, v1, g2, v2)
                    add(f"pair-{i}-{j}-{v1}-{v2}", h)
                    if h is not None:
                        for k, c in enumerate(complete_side(h)):
                            add(f"side-{i}-{j}-{v1}-{v2}-{k}", c)
    return out if limit is None else out[:limit]
