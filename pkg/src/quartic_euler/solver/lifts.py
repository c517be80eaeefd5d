"""Lifting a good circuit through 4-cycle additions, 3-cycle slides and peggings."""

from __future__ import annotations

from typing import Iterator, Sequence

from ..generation import FourCycleAddition, Pegging, ThreeCycleSlide
from ..plane_graph import PlaneGraph, Trail
from .common import InternalCaseExhaustion, Transcript, body, close, is_good_circuit, note


def _rot_from(g: PlaneGraph, v, start) -> list:
    r = [g.labels[w] for w in g.rot[g.index(v)]]
    i = r.index(start)
    return r[i:] + r[:i]


def _substitute(circuit: Sequence, centre, paths: dict, edge_paths: dict | None = None) -> list:
    """Replace passages ``p centre q`` and edges ``p q`` by the given paths.

    ``paths`` and ``edge_paths`` map frozenset endpoint pairs to a path
    listed from one end to the other; it is reversed as needed.
    """
    b = body(circuit)
    L = len(b)
    out: list = []
    for i in range(L):
        v = b[i]
        nxt = b[(i + 1) % L]
        if v == centre:
            continue
        out.append(v)
        if nxt == centre:
            q = b[(i + 2) % L]
            path = paths[frozenset((v, q))]
            if path[0] != v:
                path = path[::-1]
            out.extend(path[1:-1])
        elif edge_paths:
            path = edge_paths.get(frozenset((v, nxt)))
            if path is not None:
                if path[0] != v:
                    path = path[::-1]
                out.extend(path[1:-1])
    return out


def _passages(circuit: Sequence, centre) -> list[frozenset]:
    b = body(circuit)
    L = len(b)
    return [frozenset((b[i - 1], b[(i + 1) % L])) for i in range(L) if b[i] == centre]


def route_gadget(ends: Sequence[tuple], edges: Sequence[tuple], internal: set) -> Iterator[list[list]]:
    """Every way to cover ``edges`` by trails with the given end pairs.

    Interior vertices of each trail must lie in ``internal``.  Used as the
    fallback when none of the fixed substitutions applies.
    """
    adj: dict = {}
    for i, (p, q) in enumerate(edges):
        adj.setdefault(p, []).append((q, i))
        adj.setdefault(q, []).append((p, i))
    m = len(edges)

    def rec(k: int, used: int, acc: list[list]):
        if k == len(ends):
            if used == (1 << m) - 1:
                yield [list(p) for p in acc]
            return
        s, t = ends[k]
        path = [s]

        def walk(cur, used_):
            for w, e in adj.get(cur, ()):
                if (used_ >> e) & 1:
                    continue
                nu = used_ | (1 << e)
                if w == t:
                    path.append(w)
                    acc.append(list(path))
                    yield from rec(k + 1, nu, acc)
                    acc.pop()
                    path.pop()
                elif w in internal:
                    path.append(w)
                    yield from walk(w, nu)
                    path.pop()

        yield from walk(s, used)

    yield from rec(0, 0, [])


# ---------------------------------------------------------------------------
# 4-cycle addition


def lift_4cycle_addition(circuit: Sequence, h: PlaneGraph, g: PlaneGraph, op: FourCycleAddition,
                         tr: Transcript | None = None) -> Trail:
    """Extend a good circuit of ``h`` across a 4-cycle addition at ``op.x``."""
    x = op.x
    a, b, c, d = _rot_from(h, x, op.a)
    e, f, gg, hh = op.new
    pas = _passages(circuit, x)
    roles = dict(a=a, b=b, c=c, d=d, e=e, f=f, g=gg, h=hh, x=x)

    def P(s: str) -> list:
        return [roles[ch] for ch in s]

    cands: list[tuple[str, dict]] = []
    if frozenset((a, c)) in pas:
        cands.append(("straight", {frozenset((a, c)): P("aefxhgc"), frozenset((b, d)): P("bfgxehd")}))
    elif frozenset((a, b)) in pas:
        cands.append(("turn", {frozenset((a, b)): P("aexhgfb"), frozenset((c, d)): P("cgxfehd")}))
    elif frozenset((a, d)) in pas:
        # the turning case with the figure rotated by one quarter
        roles = dict(a=d, b=a, c=b, d=c, e=hh, f=e, g=f, h=gg, x=x)
        cands.append(("turn", {frozenset((d, a)): P("aexhgfb"), frozenset((b, c)): P("cgxfehd")}))
    for name, paths in cands:
        seq = _substitute(circuit, x, paths)
        if is_good_circuit(g, close(seq)):
            note(tr, f"lift 4-cycle addition at {x}: {name}")
            return Trail(close(seq), True)
    out = _generic_lift(circuit, g, x, pas, [], _gadget_edges(g, [e, f, gg, hh, x]), {x, e, f, gg, hh})
    if out is not None:
        note(tr, f"lift 4-cycle addition at {x}: rerouted")
        return out
    raise InternalCaseExhaustion("4-cycle lift found no substitution", g, circuit, op)


def _gadget_edges(g: PlaneGraph, inner: Sequence) -> list[tuple]:
    out = []
    seen = set()
    for v in inner:
        for w in g.rot[g.index(v)]:
            lw = g.labels[w]
            key = frozenset((v, lw))
            if key not in seen:
                seen.add(key)
                out.append((v, lw))
    return out


def _generic_lift(circuit, g, centre, passages, edge_pairs, gedges, internal) -> Trail | None:
    ends = [tuple(p) for p in passages] + [tuple(p) for p in edge_pairs]
    for paths in route_gadget(ends, gedges, internal):
        pmap = {frozenset(e): p for e, p in zip(passages, paths)}
        emap = {frozenset(e): p for e, p in zip(edge_pairs, paths[len(passages):])}
        if len(pmap) < len(passages):
            continue
        seq = _substitute(circuit, centre, pmap, emap)
        if is_good_circuit(g, close(seq)):
            return Trail(close(seq), True)
    return None


# ---------------------------------------------------------------------------
# 3-cycle slide


def lift_3cycle_slide(circuit: Sequence, h: PlaneGraph, g: PlaneGraph, op: ThreeCycleSlide,
                      tr: Transcript | None = None) -> Trail:
    """Extend a good circuit of ``h`` across a 3-cycle slide at ``op.u``."""
    u = op.u
    a, b, c, d = _rot_from(h, u, op.a)
    x, y, z = op.new
    roles = dict(a=a, b=b, c=c, d=d, x=x, y=y, z=z)

    def P(s: str) -> list:
        return [roles[ch] for ch in s]

    pas = _passages(circuit, u)
    ad = frozenset((a, d))
    options: list[tuple[str, dict, list]] = []
    if frozenset((a, c)) in pas:
        options.append(("straight", {frozenset((a, c)): P("ayzc"), frozenset((b, d)): P("byxzd")}, P("axd")))
        options.append(("straight-alt", {frozenset((a, c)): P("ayxzc"), frozenset((b, d)): P("byzd")}, P("axd")))
    elif frozenset((a, b)) in pas:
        options.append(("turn", {frozenset((a, b)): P("ayb"), frozenset((c, d)): P("czyxd")}, P("axzd")))
        options.append(("turn-alt", {frozenset((a, b)): P("axzyb"), frozenset((c, d)): P("czd")}, P("ayxd")))
    for name, paths, adp in options:
        seq = _substitute(circuit, u, paths, {ad: adp})
        if is_good_circuit(g, close(seq)):
            note(tr, f"lift 3-cycle slide at {u}: {name}")
            return Trail(close(seq), True)
    gedges = _gadget_edges(g, [x, y, z])
    out = _generic_lift(circuit, g, u, pas, [(a, d)], gedges, {x, y, z})
    if out is not None:
        note(tr, f"lift 3-cycle slide at {u}: rerouted")
        return out
    raise InternalCaseExhaustion("3-cycle slide lift found no substitution", g, circuit, op)


# ---------------------------------------------------------------------------
# pegging


def induced_circuit(circuit: Sequence, op: Pegging) -> tuple:
    """Replace ``ab`` by ``aub`` and ``cd`` by ``cud``."""
    return close(_substitute(circuit, None, {}, {
        frozenset((op.a, op.b)): [op.a, op.u, op.b],
        frozenset((op.c, op.d)): [op.c, op.u, op.d],
    }))


def lift_special_pegging(circuit: Sequence, g_small: PlaneGraph, g: PlaneGraph, op: Pegging,
                         tr: Transcript | None = None) -> Trail:
    """Peg an independent 2-edge-cut ``{ab, cd}``; the induced circuit is good."""
    seq = induced_circuit(circuit, op)
    if not is_good_circuit(g, seq):
        raise InternalCaseExhaustion("special pegging produced a short subcycle", g, seq, op)
    note(tr, f"special pegging at {op.u}")
    return Trail(seq, True)
