"""The layered construction: 3-connected, 3-edge-connected, 2-connected, connected.

Each layer splits its input at a cut, builds smaller auxiliary graphs that
satisfy the hypotheses of the layer below (or of itself, with fewer
vertices), solves those, and stitches the pieces back together.  Every
result is verified before it is returned.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

import networkx as nx

from ..formats import embed_networkx
from ..generation import FourCycleAddition, ThreeCycleSlide, antiprism, antiprism_circuit_labels, iter_reductions, unpeg
from ..obstructions import find_f6, is_octahedron, iter_c_members, monomorphisms
from ..oracle import is_locally_self_avoiding
from ..plane_graph import (
    GraphError,
    PlaneGraph,
    Trail,
    canonical_labeling,
    classify_2cut,
    complete_into_quartic,
    connectivity_report,
    euler_ok,
    from_rotation,
    identify_pendants,
    induced_subgraph,
    is_3_connected,
    is_3_edge_connected,
    plane_isomorphism,
    require_quartic,
    split_vertex,
)
from .common import (
    Disconnected,
    GoodCircuit,
    InternalCaseExhaustion,
    IsOctahedron,
    NotThreeEdgeConnected,
    NotTwoConnected,
    ObstructedByF6,
    SolveOutcome,
    Transcript,
    nested,
    note,
    require_good,
    rotate_to,
    rotate_to_edge,
)
from .fixtures import H_ROTATION, H_TRAILS
from .lifts import lift_3cycle_slide, lift_4cycle_addition, lift_special_pegging
from .pegging import lift_pegging
from .rearrange import rearrange_trails
from .splice import cut_at, splice

OCT_PLUS_4CYCLE_CIRCUIT = tuple("abwevyxcbdafyexwvdfca")


# ---------------------------------------------------------------------------
# base graphs


@lru_cache(maxsize=None)
def _oct_plus_4cycle() -> PlaneGraph:
    s = OCT_PLUS_4CYCLE_CIRCUIT
    return embed_networkx(nx.Graph(list(zip(s, s[1:]))))


@lru_cache(maxsize=None)
def _antiprism(k: int) -> PlaneGraph:
    return antiprism(k)


def base_circuit(g: PlaneGraph) -> tuple | None:
    """The written circuit when ``g`` is an antiprism or the octahedron plus a 4-cycle."""
    bases = []
    if g.n % 2 == 0 and g.n >= 8:
        k = g.n // 2
        bases.append((_antiprism(k), tuple(antiprism_circuit_labels(k))))
    if g.n == 10:
        bases.append((_oct_plus_4cycle(), OCT_PLUS_4CYCLE_CIRCUIT))
    for h, circ in bases:
        m = plane_isomorphism(g, h)
        if m is None:
            continue
        inv = {v: k for k, v in m.items()}
        return tuple(inv[v] for v in circ)
    return None


# ---------------------------------------------------------------------------
# helpers


def _ranks(g: PlaneGraph) -> list[int]:
    _, order = canonical_labeling(g)
    rank = [0] * g.n
    for i, v in enumerate(order):
        rank[v] = i
    return rank


def _strip(circuit: Sequence, drop_vertex, pendants: set) -> list[list]:
    """Maximal runs of a circuit avoiding ``drop_vertex`` and pendant-pendant edges."""
    seq = rotate_to(circuit, drop_vertex)
    pieces: list[list] = []
    cur: list | None = None
    for p, q in zip(seq, seq[1:]):
        keep = drop_vertex not in (p, q) and not (p in pendants and q in pendants)
        if keep:
            if cur is None:
                cur = [p]
            cur.append(q)
        elif cur is not None:
            pieces.append(cur)
            cur = None
    if cur is not None:
        pieces.append(cur)
    return pieces


def _rename(seq: Sequence, mapping: dict) -> list:
    return [mapping.get(v, v) for v in seq]


def _fresh(g: PlaneGraph, base: str, taken: set) -> str:
    lab = g.fresh_label(base, avoid=taken)
    taken.add(lab)
    return lab


def _trail_ok(g: PlaneGraph, seq: Sequence, skip: set = frozenset(), closed: bool = False) -> bool:
    """Covers every edge of ``g`` not touching ``skip`` exactly once, and is good."""
    want = set()
    for u, v in g.edges():
        a, b = g.labels[u], g.labels[v]
        if a in skip or b in skip:
            continue
        want.add(frozenset((a, b)))
    got = [frozenset(e) for e in zip(seq, seq[1:])]
    if len(got) != len(set(got)) or set(got) != want:
        return False
    if closed and seq[0] != seq[-1]:
        return False
    return is_locally_self_avoiding(seq, closed, 4)


# ---------------------------------------------------------------------------
# 3-connected


def good_circuit_3connected(g: PlaneGraph, tr: Transcript | None = None) -> Trail:
    """Good circuit of a 3-connected quartic plane graph other than the octahedron."""
    require_quartic(g)
    if is_octahedron(g):
        raise IsOctahedron("the octahedron has no good circuit")
    if not is_3_connected(g):
        raise GraphError("graph is not 3-connected")
    return _solve3(g, tr)


def _solve3(g: PlaneGraph, tr: Transcript | None) -> Trail:
    circ = base_circuit(g)
    if circ is not None:
        note(tr, f"base graph on {g.n} vertices")
        return require_good(g, circ, "base circuit")
    # the operations are defined for one orientation; the mirror image has
    # the same circuits, so reductions of either are usable
    for host in (g, g.mirror()):
        for st in iter_reductions(host):
            if is_octahedron(st.reduced):
                continue
            op = st.op
            note(tr, f"reduce {type(op).__name__} -> n={st.reduced.n}")
            with nested(tr):
                c = _solve3(st.reduced, tr)
            if isinstance(op, FourCycleAddition):
                out = lift_4cycle_addition(c.vertices, st.reduced, host, op, tr)
            elif isinstance(op, ThreeCycleSlide):
                out = lift_3cycle_slide(c.vertices, st.reduced, host, op, tr)
            else:
                out = lift_pegging(c.vertices, st.reduced, host, op, resolver=lambda h: _solve3(h, tr), tr=tr)
            return require_good(g, out.vertices, "3-connected lift")
    raise InternalCaseExhaustion("no reduction applies to a non-base 3-connected graph", g)


# ---------------------------------------------------------------------------
# 3-edge-connected


def good_circuit_3edgeconnected(g: PlaneGraph, tr: Transcript | None = None) -> Trail:
    require_quartic(g)
    if is_octahedron(g):
        raise IsOctahedron("the octahedron has no good circuit")
    if not is_3_edge_connected(g):
        raise NotThreeEdgeConnected("graph has an edge cut of size at most 2")
    return _solve3ec(g, tr)


def _least_vertex_cut(g: PlaneGraph) -> tuple[int, int] | None:
    rep = connectivity_report(g)
    if not rep.two_vertex_cuts:
        return None
    rank = _ranks(g)
    return min((c.vertices for c in rep.two_vertex_cuts), key=lambda c: sorted((rank[c[0]], rank[c[1]])))


def _solve3ec(g: PlaneGraph, tr: Transcript | None) -> Trail:
    cut = _least_vertex_cut(g)
    if cut is None:
        return _solve3(g, tr)
    ix, iy = cut
    x, y = g.labels[ix], g.labels[iy]
    _, side_a, side_b = classify_2cut(g, cut)
    sides = [[g.labels[v] for v in side_a], [g.labels[v] for v in side_b]]
    note(tr, f"2-vertex-cut {{{x}, {y}}}")
    with nested(tr):
        res = [_side_3ec(g, s, x, y, tr) for s in sides]
        out = _stitch_3ec(g, x, y, sides, res, tr)
    return require_good(g, out, "3-edge-connected stitch")


def _side_3ec(g: PlaneGraph, side: Sequence, x, y, tr) -> tuple[str, list, list]:
    """Two good trails covering one side: ``XY`` (two x-y trails) or ``XX`` (x- and y-circuits)."""
    a = induced_subgraph(g, [g.index(v) for v in side])
    taken = set(a.labels)
    xs = [_fresh(a, f"{x}_", taken) for _ in range(2)]
    ys = [_fresh(a, f"{y}_", taken) for _ in range(2)]
    w, _ = split_vertex(a, x, xs)
    w, _ = split_vertex(w, y, ys)
    z = _fresh(a, "z", taken)
    aux, z = complete_into_quartic(w, z)
    note(tr, f"side of {len(side)} vertices -> auxiliary graph on {aux.n}")
    with nested(tr):
        c = _solve3ec(aux, tr)
    pieces = _strip(c.vertices, z, set(xs + ys))
    if len(pieces) != 2:
        raise InternalCaseExhaustion("stripping the completion did not leave two trails", aux, c.vertices)
    pair = rearrange_trails(w, pieces[0], pieces[1], xs, ys)
    ren = {xs[0]: x, xs[1]: x, ys[0]: y, ys[1]: y}
    return pair.shape, _rename(pair.first, ren), _rename(pair.second, ren)


def _side_identified(g: PlaneGraph, side: Sequence, x, y, tr) -> tuple[str, list, list]:
    """The second auxiliary graph: ``x`` and ``y`` identified into one vertex.

    Returns ``CIRC`` with a circuit of the side when both passages through
    the identified vertex stay at ``x`` or at ``y``; otherwise the two runs
    between the passages, brought to standard shape.
    """
    a = induced_subgraph(g, [g.index(v) for v in side])
    taken = set(a.labels)
    xs = [_fresh(a, f"{x}_", taken) for _ in range(2)]
    ys = [_fresh(a, f"{y}_", taken) for _ in range(2)]
    w, _ = split_vertex(a, x, xs)
    w, _ = split_vertex(w, y, ys)
    u = _fresh(a, "u", taken)
    aux = identify_pendants(w, xs + ys, u)
    if is_octahedron(aux):
        note(tr, "identified side is the octahedron; using the H trails")
        return ("XY", *_h_trails(a, x, y))
    note(tr, f"identified side -> auxiliary graph on {aux.n}")
    with nested(tr):
        c = _solve3ec(aux, tr)
    pend_of = {}
    for p in xs + ys:
        pend_of[w.labels[w.rot[w.index(p)][0]]] = p
    ren = {xs[0]: x, xs[1]: x, ys[0]: y, ys[1]: y}
    seq = list(rotate_to(c.vertices, u))
    side_of = {nb: ren[p] for nb, p in pend_of.items()}
    k = seq.index(u, 1)
    passages = [(seq[-2], seq[1]), (seq[k - 1], seq[k + 1])]
    if all(side_of[p] == side_of[q] for p, q in passages):
        circ = [side_of[seq[1]]] + seq[1:k] + [side_of[seq[k + 1]]] + seq[k + 1:-1] + [side_of[seq[1]]]
        return "CIRC", list(rotate_to(circ, x)), []
    runs = [seq[1:k], seq[k + 1:-1]]
    trails = [[pend_of[r[0]]] + r + [pend_of[r[-1]]] for r in runs]
    pair = rearrange_trails(w, trails[0], trails[1], xs, ys)
    return _normal(pair.shape, _rename(pair.first, ren), _rename(pair.second, ren), x)


def _h_trails(a: PlaneGraph, x, y) -> tuple[list, list]:
    h_adj = {v: set(ns) for v, ns in H_ROTATION.items()}
    for fx, fy in ((x, y), (y, x)):
        for m in monomorphisms(h_adj, a, fixed={"x": a.index(fx), "y": a.index(fy)}, induced=True):
            lab = {k: a.labels[v] for k, v in m.items()}
            t1 = [lab[v] for v in H_TRAILS[0]]
            t2 = [lab[v] for v in H_TRAILS[1]]
            if fx != x:
                t1, t2 = t1[::-1], t2[::-1]
            return t1, t2
    raise InternalCaseExhaustion("identified side is the octahedron but the side is not H", a)


def _normal(shape: str, t1: list, t2: list, x) -> tuple[str, list, list]:
    """XY trails run from x; an XX pair lists the x-circuit first."""
    if shape == "XY":
        return shape, (t1 if t1[0] == x else t1[::-1]), (t2 if t2[0] == x else t2[::-1])
    if t1[0] != x:
        t1, t2 = t2, t1
    return shape, t1, t2


def _combinations(g: PlaneGraph, x, y, ra, rb, in_a) -> Iterator[tuple[str, list]]:
    """Candidate circuits from one representation of each side."""
    for (ka, p1, p2), (kb, q1, q2), a_first in ((ra, rb, True), (rb, ra, False)):
        if ka == "XY" and kb == "XY" and a_first:
            yield "both sides have x-y trails", p1 + q1[::-1][1:] + p2[1:] + q2[::-1][1:]
        elif ka == "XY" and kb == "XX":
            yield "x-y trails against circuits", q1 + p1[1:] + q2[1:] + p2[::-1][1:]
        elif ka == "XX" and kb == "XX" and a_first:
            common = set(g.labels[v] for v in g.rot[g.index(x)]) & set(g.labels[v] for v in g.rot[g.index(y)])
            for v in sorted(common, key=repr):
                P1, P2, Q1, Q2 = (p1, p2, q1, q2) if in_a(v) else (q1, q2, p1, p2)
                P = P1 if P1[-2] == v else P1[::-1]
                Q = P2 if P2[-2] == v else P2[::-1]
                yield f"circuits on both sides, common neighbour {v}", P[:-1] + [y] + Q2[1:] + Q[1:-1] + [x] + Q1[1:]
        elif ka == "CIRC":
            k = p1.index(y)
            c1, c2 = p1[:k + 1], p1[k:]
            if kb == "CIRC" and a_first:
                yield "side circuits joined at x", p1 + q1[1:]
            elif kb == "XX":
                yield "side circuit with inserted circuits", c1 + q2[1:] + c2[1:] + q1[1:]
            elif kb == "XY":
                yield "side circuit through x-y trails", c1 + q1[::-1][1:] + q2[1:] + c2[1:]


def _stitch_3ec(g: PlaneGraph, x, y, sides, res, tr) -> list:
    sa = set(sides[0])
    reps = [[_normal(*r, x)] for r in res]

    def attempt():
        for ra in reps[0]:
            for rb in reps[1]:
                for why, c in _combinations(g, x, y, ra, rb, lambda v: v in sa):
                    if _trail_ok(g, c, closed=True):
                        note(tr, f"stitch: {why}")
                        return c
        return None

    out = attempt()
    if out is not None:
        return out
    for k, s in enumerate(sides):
        try:
            reps[k].append(_side_identified(g, s, x, y, tr))
        except GraphError:
            # identification would create a parallel edge
            continue
    out = attempt()
    if out is not None:
        return out
    # re-thread all side trails at growing anchor sets
    pieces = [t for rs in reps for _, t1, t2 in rs[:1] for t in (t1, t2)]
    anchors = {x, y}
    for _ in range(3):
        out = splice(cut_at(pieces, anchors), closed=True)
        if out is not None and _trail_ok(g, out, closed=True):
            note(tr, f"stitch: re-threaded at {len(anchors)} anchors")
            return out
        anchors = anchors | {g.labels[w] for v in anchors for w in g.rot[g.index(v)]}
    raise InternalCaseExhaustion("no stitch of the side trails verified", g)


# ---------------------------------------------------------------------------
# 2-connected


def good_circuit_2connected(g: PlaneGraph, tr: Transcript | None = None) -> SolveOutcome:
    require_quartic(g)
    if not g.is_connected() or connectivity_report(g).cutvertices:
        raise NotTwoConnected("graph is not 2-connected")
    f6 = find_f6(g)
    if f6 is not None:
        return ObstructedByF6(f6)
    return GoodCircuit(_solve(g, tr))


def _side_with_stubs(g: PlaneGraph, inner: set, cut_pairs: Sequence[tuple]) -> tuple[PlaneGraph, list]:
    """Restrict to ``inner``; each cut edge (inside, outside) becomes a pendant stub."""
    taken = set(g.labels)
    stubs = [_fresh(g, "stub", taken) for _ in cut_pairs]
    where = {(p, q): s for (p, q), s in zip(cut_pairs, stubs)}
    rot = {}
    for v in inner:
        r = []
        for w in g.rot[g.index(v)]:
            lw = g.labels[w]
            if lw in inner:
                r.append(lw)
            elif (v, lw) in where:
                r.append(where[(v, lw)])
            else:
                raise InternalCaseExhaustion(f"edge {v}{lw} leaves the side but is not in the cut", g)
        rot[v] = r
    for (p, _), s in zip(cut_pairs, stubs):
        rot[s] = [p]
    return from_rotation(rot), stubs


def _least_edge_cut(g: PlaneGraph):
    rep = connectivity_report(g)
    if not rep.two_edge_cuts:
        return None
    rank = _ranks(g)
    return min(rep.two_edge_cuts, key=lambda c: sorted(rank[v] for e in c.edges for v in e))


def _solve_2ec(g: PlaneGraph, cut, tr) -> Trail:
    side_a = {g.labels[v] for v in cut.side_a}
    (e0, e1), (f0, f1) = cut.edges
    L = g.labels
    x, s = (L[e0], L[e1]) if L[e0] in side_a else (L[e1], L[e0])
    y, t = (L[f0], L[f1]) if L[f0] in side_a else (L[f1], L[f0])
    side_b = set(L) - side_a
    note(tr, f"2-edge-cut {{{x}{s}, {y}{t}}}")
    with nested(tr):
        sa, stubs_a = _side_with_stubs(g, side_a, [(x, s), (y, t)])
        pa = solve_side(sa, x, y, stubs_a, tr)
        sb, stubs_b = _side_with_stubs(g, side_b, [(t, y), (s, x)])
        pb = solve_side(sb, t, s, stubs_b, tr)
    return require_good(g, list(pa) + list(pb) + [x], "2-edge-cut stitch")


def solve_side(s: PlaneGraph, x, y, stubs: Sequence, tr: Transcript | None = None) -> list:
    """A good Eulerian x-y trail of one side of a 2-edge-cut.

    ``s`` holds the side plus one pendant stub per cut edge, attached at
    ``x`` and ``y``.
    """
    skip = set(stubs)
    for cm in iter_c_members(s, x, y, stubs):
        if cm.which == "G7":
            cand = list(cm.head)
        else:
            inner = {v for v in s.labels if v not in cm.vertices and v not in skip}
            s1, st1 = _side_with_stubs(s, inner, [(cm.exit_to, cm.head[-1]), (cm.enter_from, cm.tail[0])])
            note(tr, f"near-obstruction {cm.which} at the cut; continuing past it")
            with nested(tr):
                inner_trail = solve_side(s1, cm.exit_to, cm.enter_from, st1, tr)
            cand = list(cm.head) + inner_trail + list(cm.tail)
        if _trail_ok(s, cand, skip):
            return cand
    ix, iy = s.index(x), s.index(y)
    nx_ = [s.labels[w] for w in s.rot[ix] if s.labels[w] not in skip]
    ny_ = [s.labels[w] for w in s.rot[iy] if s.labels[w] not in skip]
    common = [v for v in nx_ if v in ny_]
    if y not in nx_:
        out = _side_case_a(s, x, y, stubs, tr)
    elif not common:
        out = _side_case_b(s, x, y, stubs, tr)
    elif len(common) == 1:
        out = _side_case_c(s, x, y, common[0], stubs, tr)
    elif len(common) == 2:
        out = _side_case_d(s, x, y, common, stubs, tr)
    else:
        raise InternalCaseExhaustion("side has no applicable case", s)
    if not _trail_ok(s, out, skip):
        raise InternalCaseExhaustion("side trail fails verification", s, out)
    return out


def _free_of_f6(aux: PlaneGraph, what: str) -> None:
    if find_f6(aux) is not None:
        raise InternalCaseExhaustion(f"{what}: auxiliary graph contains F6", aux)


def _side_case_a(s, x, y, stubs, tr) -> list:
    rot = s.rotation()
    sx, sy = stubs
    for v in stubs:
        del rot[v]
    rot[x][rot[x].index(sx)] = y
    rot[y][rot[y].index(sy)] = x
    aux = from_rotation(rot)
    if not euler_ok(aux):
        raise InternalCaseExhaustion("adding xy broke planarity", aux)
    note(tr, f"case (a): add edge {x}{y}")
    _free_of_f6(aux, "case (a)")
    with nested(tr):
        c = _solve(aux, tr)
    return list(rotate_to_edge(c.vertices, y, x)[1:])


def _side_case_b(s, x, y, stubs, tr) -> list:
    skip = set(stubs)
    rot = s.rotation()
    rx, ry = rot[x], rot[y]
    i, j = rx.index(y), ry.index(x)
    part_x = rx[i + 1:] + rx[:i]
    part_y = ry[j + 1:] + ry[:j]
    v = _fresh(s, "v", set(s.labels))
    for k in (x, y, *stubs):
        del rot[k]
    rot[v] = [w for w in part_x + part_y if w not in skip]
    for w in rot[v]:
        r = rot[w]
        r[r.index(x if w in part_x else y)] = v
    aux = from_rotation(rot)
    note(tr, f"case (b): contract {x}{y}")
    _free_of_f6(aux, "case (b)")
    with nested(tr):
        c = _solve(aux, tr)
    role = {w: x for w in part_x}
    role.update({w: y for w in part_y})
    seq = rotate_to(c.vertices, v)
    k = seq.index(v, 1)
    r1, r2 = list(seq[1:k]), list(seq[k + 1:-1])
    pieces = [[role[r1[0]]] + r1 + [role[r1[-1]]], [role[r2[0]]] + r2 + [role[r2[-1]]], [x, y]]
    out = splice(pieces, start=x, end=y)
    if out is None:
        raise InternalCaseExhaustion("case (b): no rethreading through xy", aux, c.vertices)
    return out


def _solve_completed(w: PlaneGraph, xs: Sequence, ys: Sequence, what: str, tr):
    taken = set(w.labels)
    z = _fresh(w, "c", taken)
    aux, z = complete_into_quartic(w, z)
    _free_of_f6(aux, what)
    with nested(tr):
        c = _solve(aux, tr)
    pieces = _strip(c.vertices, z, set(xs) | set(ys))
    if len(pieces) != 2:
        raise InternalCaseExhaustion(f"{what}: stripping did not leave two trails", aux, c.vertices)
    return rearrange_trails(w, pieces[0], pieces[1], xs, ys)


def _side_case_c(s, x, y, v, stubs, tr) -> list:
    skip = set(stubs)
    rot = s.rotation()
    for k in stubs:
        del rot[k]
    rot[x] = [w for w in rot[x] if w not in (y, v) and w not in skip]
    rot[y] = [w for w in rot[y] if w not in (x, v) and w not in skip]
    rot[v] = [w for w in rot[v] if w not in (x, y)]
    w0 = from_rotation(rot)
    taken = set(w0.labels)
    vs = [_fresh(w0, f"{v}_", taken) for _ in range(2)]
    w1, _ = split_vertex(w0, v, vs)
    note(tr, f"case (c): common neighbour {v}")
    pair = _solve_completed(w1, vs, [x, y], "case (c)", tr)
    ren = {vs[0]: v, vs[1]: v}
    b2 = w0.labels[w0.rot[w0.index(y)][0]]
    cands: list[list] = []
    if pair.shape == "XX":
        P = _rename(pair.first, ren)
        Q = list(pair.second) if pair.second[0] == x else list(pair.second[::-1])
        for PP in (P, P[::-1]):
            cands.append(Q + [x, v] + PP[1:-1] + [v, y])
    else:
        t1, t2 = _rename(pair.first, ren), _rename(pair.second, ren)
        t1 = t1 if t1[-1] == v else t1[::-1]
        t2 = t2 if t2[-1] == v else t2[::-1]
        P, Q = (t1, t2) if t1[0] == x else (t2, t1)
        cands.append(P[:-1] + [v, x, y] + Q[1:-1] + [v, y])
        if len(P) > 2 and len(Q) > 2 and P[-2] == b2 and Q[1] == b2:
            Pp, Qp = P[:-2], Q[2:-1]
            cands.append(Pp + [b2, y, x, v] + Qp[::-1] + [b2, v, y])
    for c in cands:
        if _trail_ok(s, c, skip):
            return c
    pieces = cut_at([pair.first, pair.second], {v, x, y, b2} | set(vs))
    pieces = [_rename(p, ren) for p in pieces] + [[x, y], [x, v], [v, y]]
    out = splice(pieces, start=x, end=y)
    if out is not None:
        note(tr, "case (c): re-threaded")
        return out
    raise InternalCaseExhaustion("case (c): no trail verified", s)


def _side_case_d(s, x, y, common, stubs, tr) -> list:
    v, w = common
    if s.has_edge(s.index(v), s.index(w)):
        raise InternalCaseExhaustion("case (d) with adjacent common neighbours is a K4 side", s)
    rot = s.rotation()
    for k in (x, y, *stubs):
        del rot[k]
    rot[v] = [t for t in rot[v] if t not in (x, y)]
    rot[w] = [t for t in rot[w] if t not in (x, y)]
    w0 = from_rotation(rot)
    taken = set(w0.labels)
    vs = [_fresh(w0, f"{v}_", taken) for _ in range(2)]
    ws = [_fresh(w0, f"{w}_", taken) for _ in range(2)]
    w1, _ = split_vertex(w0, v, vs)
    w1, _ = split_vertex(w1, w, ws)
    note(tr, f"case (d): common neighbours {v}, {w}")
    pair = _solve_completed(w1, vs, ws, "case (d)", tr)
    ren = {vs[0]: v, vs[1]: v, ws[0]: w, ws[1]: w}
    P, Q = _rename(pair.first, ren), _rename(pair.second, ren)
    cands = []
    if pair.shape == "XX":
        cands.append([x] + P + [y, x] + Q + [y])
        cands.append([x] + P[::-1] + [y, x] + Q + [y])
    else:
        P = P if P[0] == v else P[::-1]
        Q = Q if Q[0] == v else Q[::-1]
        cands.append([x] + P + [x, y] + Q + [y])
    for c in cands:
        if _trail_ok(s, c, set(stubs)):
            return c
    pieces = [P, Q, [x, v], [x, w], [y, v], [y, w], [x, y]]
    out = splice(cut_at(pieces, {x, y, v, w}), start=x, end=y)
    if out is not None:
        note(tr, "case (d): re-threaded")
        return out
    raise InternalCaseExhaustion("case (d): no trail verified", s)


# ---------------------------------------------------------------------------
# connected


def _solve(g: PlaneGraph, tr: Transcript | None) -> Trail:
    """Good circuit of a connected F6-free quartic plane graph."""
    rep = connectivity_report(g)
    if rep.cutvertices:
        rank = _ranks(g)
        xi = min(rep.cutvertices, key=lambda v: rank[v])
        return _solve_cutvertex(g, xi, tr)
    if rep.two_edge_cuts:
        return _solve_2ec(g, _least_edge_cut(g), tr)
    if is_octahedron(g):
        raise InternalCaseExhaustion("reached the octahedron in an F6-free branch", g)
    return _solve3ec(g, tr)


def _solve_cutvertex(g: PlaneGraph, xi: int, tr) -> Trail:
    x = g.labels[xi]
    comps = g.components(removed=[xi])
    comp_of = {g.labels[v]: k for k, c in enumerate(comps) for v in c}
    for pairing in (0, 1):
        st = unpeg(g, x, pairing, special=True)
        if st is None:
            continue
        op = st.op
        if comp_of[op.a] == comp_of[op.b] or comp_of[op.c] == comp_of[op.d]:
            continue
        if not euler_ok(st.reduced):
            continue
        note(tr, f"cutvertex {x}: unpeg")
        with nested(tr):
            c = _solve(st.reduced, tr)
        out = lift_special_pegging(c.vertices, st.reduced, g, op, tr)
        return require_good(g, out.vertices, "special pegging")
    raise InternalCaseExhaustion(f"cutvertex {x} admits no planar unpegging", g)


def good_circuit(g: PlaneGraph, tr: Transcript | None = None) -> SolveOutcome:
    """A good Eulerian circuit, or the reason none exists."""
    require_quartic(g)
    comps = g.components()
    if len(comps) != 1:
        return Disconnected(len(comps))
    f6 = find_f6(g)
    if f6 is not None:
        note(tr, "contains F6")
        return ObstructedByF6(f6)
    return GoodCircuit(_solve(g, tr))
