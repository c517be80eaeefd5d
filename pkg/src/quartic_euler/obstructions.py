"""The F6 obstruction, the octahedron, and the near-obstructions at 2-edge-cuts.

F6 is the complement of P2 + P4.  With the labelling used throughout, its
degree-3 vertices are ``x`` and ``y`` and its edges are::

    xa xb xc ya yc yd ab ad bc bd cd

Adding the edge ``xy`` gives the octahedron.

The class of near-obstructions consists of F6 - e, G7, G7 - e (e != xy) and
K4.  Each member comes with a pair of trails ``T1, T2`` covering its edges;
when a copy sits between two 2-edge-cuts, an Eulerian trail of the far side
is threaded between ``T1`` and ``T2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Hashable, Iterator, Sequence

from .plane_graph import PlaneGraph

Label = Hashable

F6_EDGES = ("xa", "xb", "xc", "ya", "yc", "yd", "ab", "ad", "bc", "bd", "cd")
F6_VERTICES = "xyabcd"
G7_TRAIL = "xacbedxybadcey"
F6_TRAIL = "xcbdyabxadcy"
K4_TRAILS = ("xvyw", "vwxy")


def _edges_of(trail: str) -> list[tuple[str, str]]:
    return [(trail[i], trail[i + 1]) for i in range(len(trail) - 1)]


def _adj(edges: Sequence[tuple]) -> dict:
    adj: dict = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    return adj


F6_ADJ = _adj([(e[0], e[1]) for e in F6_EDGES])


# ---------------------------------------------------------------------------
# small pattern matcher


def monomorphisms(pattern: dict, g: PlaneGraph, fixed: dict | None = None,
                  induced: bool = False) -> Iterator[dict]:
    """Injective maps from pattern vertices to ``g`` preserving edges.

    ``pattern`` maps each pattern vertex to its neighbour set; ``fixed``
    pins some pattern vertices to vertex ids of ``g``.  Vertices are placed
    in an order that keeps each new one adjacent to an earlier one.
    """
    fixed = dict(fixed or {})
    verts = list(pattern)
    order: list = [v for v in verts if v in fixed]
    if not order:
        order.append(max(verts, key=lambda v: len(pattern[v])))
    while len(order) < len(verts):
        rest = [v for v in verts if v not in order]
        rest.sort(key=lambda v: (-sum(1 for w in pattern[v] if w in order), -len(pattern[v])))
        order.append(rest[0])
    pdeg = {v: len(pattern[v]) for v in verts}
    mapping: dict = {}
    used: set = set()

    def candidates(pv):
        if pv in fixed:
            return [fixed[pv]]
        placed = [w for w in pattern[pv] if w in mapping]
        if placed:
            base = set(g.rot[mapping[placed[0]]])
            for w in placed[1:]:
                base &= set(g.rot[mapping[w]])
            return sorted(base)
        return range(g.n)

    def rec(i):
        if i == len(order):
            yield dict(mapping)
            return
        pv = order[i]
        for gv in candidates(pv):
            if gv in used or g.degree(gv) < pdeg[pv]:
                continue
            ok = True
            for w in pattern[pv]:
                if w in mapping and not g.has_edge(gv, mapping[w]):
                    ok = False
                    break
            if ok and induced:
                for w, gw in mapping.items():
                    if w not in pattern[pv] and g.has_edge(gv, gw):
                        ok = False
                        break
            if not ok:
                continue
            mapping[pv] = gv
            used.add(gv)
            yield from rec(i + 1)
            del mapping[pv]
            used.discard(gv)

    yield from rec(0)


def find_f6(g: PlaneGraph) -> dict | None:
    """A copy of F6 in ``g`` (not necessarily induced), as a label map."""
    for m in monomorphisms(F6_ADJ, g):
        return {k: g.labels[v] for k, v in m.items()}
    return None


def find_f6_naive(g: PlaneGraph) -> dict | None:
    """Reference matcher: all 6-subsets and all bijections."""
    from itertools import combinations

    for sub in combinations(range(g.n), 6):
        for perm in permutations(sub):
            m = dict(zip(F6_VERTICES, perm))
            if all(g.has_edge(m[e[0]], m[e[1]]) for e in F6_EDGES):
                return {k: g.labels[v] for k, v in m.items()}
    return None


def f6_copies(g: PlaneGraph) -> list[frozenset]:
    """Vertex sets of all F6 copies."""
    out = set()
    for m in monomorphisms(F6_ADJ, g):
        out.add(frozenset(m.values()))
    return sorted(out, key=sorted)


def is_octahedron(g: PlaneGraph) -> bool:
    if g.n != 6 or g.m != 12:
        return False
    return all(g.degree(v) == 4 for v in range(g.n))


# ---------------------------------------------------------------------------
# near-obstructions


@dataclass(frozen=True)
class Member:
    """A near-obstruction with its covering trail pair(s)."""

    name: str
    adj: dict = field(hash=False, compare=False)
    trails: tuple  # tuple of (T1, T2) label strings; empty T2 for G7


def _member(name: str, edges: Sequence[tuple], trails: Sequence[tuple]) -> Member:
    return Member(name, _adj(edges), tuple(trails))


def _split_at(trail: str, e: tuple) -> tuple[str, str]:
    for i in range(len(trail) - 1):
        if {trail[i], trail[i + 1]} == set(e):
            return trail[: i + 1], trail[i + 1:]
    raise ValueError(f"edge {e} not on {trail}")


def _members() -> list[Member]:
    out = []
    g7_edges = _edges_of(G7_TRAIL)
    out.append(_member("G7", g7_edges, [(G7_TRAIL, "")]))
    for e in g7_edges:
        if set(e) == {"x", "y"}:
            continue
        rest = [f for f in g7_edges if f != e]
        out.append(_member(f"G7-{e[0]}{e[1]}", rest, [_split_at(G7_TRAIL, e)]))
    f6 = [(s[0], s[1]) for s in F6_EDGES]
    # one representative per edge orbit; other edges follow by relabelling
    table = {
        ("x", "a"): _split_at(F6_TRAIL, ("x", "a")),
        ("x", "b"): _split_at(F6_TRAIL, ("x", "b")),
        ("c", "b"): _split_at(F6_TRAIL, ("c", "b")),
        ("b", "d"): ("xbcdyab", "daxcy"),
    }
    for e, pair in table.items():
        rest = [f for f in f6 if set(f) != set(e)]
        out.append(_member(f"F6-{e[0]}{e[1]}", rest, [pair]))
    k4 = [("x", "y"), ("x", "v"), ("x", "w"), ("y", "v"), ("y", "w"), ("v", "w")]
    out.append(_member("K4", k4, [K4_TRAILS]))
    return out


MEMBERS = _members()


@dataclass(frozen=True)
class CMember:
    """A near-obstruction copy at a cut, transported into the host graph.

    ``head`` and ``tail`` are host-label trails; the Eulerian trail of the
    far side enters after ``head`` (at ``exit_to``) and returns before
    ``tail`` (from ``enter_from``).  ``head`` starts at one cut end and
    ``tail`` finishes at the other.  For G7 the far side is empty.
    """

    which: str
    vertex_map: dict
    head: tuple
    tail: tuple
    exit_to: Label | None
    enter_from: Label | None
    vertices: frozenset


def _outside(g: PlaneGraph, S: set, v: int, ignore: set) -> list[int]:
    return [w for w in g.rot[v] if w not in S and w not in ignore]


def c_subgraph_at_cut(side: PlaneGraph, x: Label, y: Label, stubs: Sequence[Label] = ()) -> CMember | None:
    """Find a near-obstruction containing both cut ends ``x`` and ``y``.

    ``side`` is one side of a 2-edge-cut; ``stubs`` are pendant vertices that
    stand for the cut edges and are ignored.  The copy must be induced and
    have exactly two further edges leaving it (none for G7), which form the
    next cut of the chain.  Members are tried in the order G7, G7 - e,
    F6 - e, K4, so the larger of two nested candidates wins.
    """
    return next(iter_c_members(side, x, y, stubs), None)


def iter_c_members(side: PlaneGraph, x: Label, y: Label, stubs: Sequence[Label] = ()) -> Iterator[CMember]:
    """Like :func:`c_subgraph_at_cut` but yielding every transported variant."""
    ix, iy = side.index(x), side.index(y)
    stub_ids = {side.index(s) for s in stubs}
    L = side.labels
    for mem in MEMBERS:
        for t1, t2 in mem.trails:
            if mem.name == "G7":
                conv = [(t1[0], t1[-1], None, None)]
            else:
                conv = [(t1[0], t2[-1], t1[-1], t2[0]), (t1[-1], t2[0], t1[0], t2[-1])]
            for p_end, q_end, r1, r2 in conv:
                for fx, fy in ((ix, iy), (iy, ix)):
                    for m in monomorphisms(mem.adj, side, fixed={p_end: fx, q_end: fy}, induced=True):
                        S = set(m.values())
                        if S & stub_ids:
                            continue
                        nleave = sum(len(_outside(side, S, gv, stub_ids)) for gv in m.values())
                        vm = {k: L[v] for k, v in m.items()}
                        if mem.name == "G7":
                            if nleave == 0:
                                seq = tuple(vm[c] for c in t1)
                                if seq[0] != x:
                                    seq = seq[::-1]
                                yield CMember("G7", vm, seq, (), None, None, frozenset(vm.values()))
                            continue
                        if nleave != 2:
                            continue
                        if p_end == t1[0]:
                            head = tuple(vm[c] for c in t1)
                            tail = tuple(vm[c] for c in t2)
                        else:
                            head = tuple(vm[c] for c in reversed(t1))
                            tail = tuple(vm[c] for c in reversed(t2))
                        if head[0] != x:
                            head, tail = tuple(reversed(tail)), tuple(reversed(head))
                        oa = [L[w] for w in _outside(side, S, side.index(head[-1]), stub_ids)]
                        ob = [L[w] for w in _outside(side, S, side.index(tail[0]), stub_ids)]
                        if head[-1] == tail[0]:
                            if len(oa) != 2:
                                continue
                            for ex, en in ((oa[0], oa[1]), (oa[1], oa[0])):
                                yield CMember(mem.name, vm, head, tail, ex, en, frozenset(vm.values()))
                        else:
                            if len(oa) != 1 or len(ob) != 1:
                                continue
                            yield CMember(mem.name, vm, head, tail, oa[0], ob[0], frozenset(vm.values()))
