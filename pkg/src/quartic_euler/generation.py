"""Antiprisms, the three expansion operations, and isomorph-free generation.

Every 3-connected quartic plane graph arises from an antiprism by a
sequence of peggings, 4-cycle additions and 3-cycle slides.  Operations are
recorded with explicit labels so that a circuit of the smaller graph can be
lifted to the larger one vertex by vertex.

Role conventions (rotations are clockwise):

* ``Pegging(a, b, c, d, u)``: darts ``a->b`` and ``c->d`` lie on one face;
  edges ``ab`` and ``cd`` are replaced by the new vertex ``u`` with rotation
  ``(a, d, c, b)``.  The standard operation needs ``bc`` to be an edge.
* ``FourCycleAddition(x, a, (e, f, g, h))``: the rotation at ``x`` read from
  ``a`` is ``(a, b, c, d)``; ``x`` is surrounded by the new 4-cycle ``efgh``
  with ``e`` next to ``a``, ``f`` to ``b``, ``g`` to ``c``, ``h`` to ``d``.
* ``ThreeCycleSlide(u, a, (x, y, z))``: the rotation at ``u`` read from
  ``a`` is ``(a, b, c, d)`` and ``d, u, a`` bound a triangular face.  The
  vertex ``u`` and the edge ``ad`` are replaced by the triangle ``xyz`` with
  ``x`` adjacent to ``a`` and ``d``, ``y`` to ``a`` and ``b``, ``z`` to ``d``
  and ``c``.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from threading import Lock
from typing import Hashable, Iterator, Union

import networkx as nx

from .formats import embed_networkx
from .plane_graph import (
    GraphError,
    PlaneGraph,
    canonical_code,
    euler_ok,
    from_rotation,
    is_3_connected,
)

Label = Hashable


class PatternAbsent(GraphError):
    pass


class WouldCreateParallelEdge(GraphError):
    pass


class NoReduction(GraphError):
    pass


@dataclass(frozen=True)
class Pegging:
    a: Label
    b: Label
    c: Label
    d: Label
    u: Label
    special: bool = False


@dataclass(frozen=True)
class FourCycleAddition:
    x: Label
    a: Label
    new: tuple


@dataclass(frozen=True)
class ThreeCycleSlide:
    u: Label
    a: Label
    new: tuple


ExpansionOp = Union[Pegging, FourCycleAddition, ThreeCycleSlide]


@dataclass(frozen=True)
class ReductionStep:
    """``apply(reduced, op)`` reproduces the original graph label for label."""

    op: ExpansionOp
    reduced: PlaneGraph


# ---------------------------------------------------------------------------
# antiprisms


def antiprism_circuit_labels(k: int) -> list[str]:
    """The good circuit of the k-antiprism in its standard labelling."""
    xs = [f"x{i}" for i in range(1, k)]
    ys = [f"y{i}" for i in range(1, k - 1)]
    seq = ["a", "b", "c"] + ys[::-1] + xs + ["c", "a", "x1", "b"]
    for i in range(1, k - 1):
        seq += [f"y{i}", f"x{i + 1}"]
    seq.append("a")
    return seq


def antiprism(k: int) -> PlaneGraph:
    """The k-antiprism labelled a, b, c, x1..x(k-1), y1..y(k-2)."""
    if k < 3:
        raise ValueError("antiprisms need k >= 3")
    seq = antiprism_circuit_labels(k)
    g = nx.Graph()
    g.add_nodes_from(["a", "b", "c"] + [f"x{i}" for i in range(1, k)] + [f"y{i}" for i in range(1, k - 1)])
    g.add_edges_from(zip(seq, seq[1:]))
    assert g.number_of_edges() == 4 * k
    return embed_networkx(g)


# ---------------------------------------------------------------------------
# applying operations


def _replace(rot: dict, v, old, new) -> None:
    r = rot[v]
    r[r.index(old)] = new


def _rot_from(g: PlaneGraph, x, a) -> list:
    r = [g.labels[w] for w in g.rot[g.index(x)]]
    i = r.index(a)
    return r[i:] + r[:i]


def _same_face(g: PlaneGraph, d1: tuple, d2: tuple) -> bool:
    for f in g.face_darts():
        if d1 in f:
            return d2 in f
    return False


def apply(g: PlaneGraph, op: ExpansionOp) -> PlaneGraph:
    """Apply an expansion operation; raises if its pattern is missing."""
    if isinstance(op, Pegging):
        return _apply_pegging(g, op)
    if isinstance(op, FourCycleAddition):
        return _apply_4cycle(g, op)
    if isinstance(op, ThreeCycleSlide):
        return _apply_slide(g, op)
    raise TypeError(op)


def _apply_pegging(g: PlaneGraph, op: Pegging) -> PlaneGraph:
    a, b, c, d, u = op.a, op.b, op.c, op.d, op.u
    try:
        ia, ib, ic, id_ = (g.index(v) for v in (a, b, c, d))
    except KeyError:
        raise PatternAbsent("unknown vertex") from None
    if len({a, b, c, d}) != 4:
        raise PatternAbsent("pegged edges must be disjoint")
    if not (g.has_edge(ia, ib) and g.has_edge(ic, id_)):
        raise PatternAbsent("pegged pair must be edges")
    if not op.special and not g.has_edge(ib, ic):
        raise PatternAbsent("pegging needs the path abcd")
    if not _same_face(g, (ia, ib), (ic, id_)):
        raise PatternAbsent("darts a->b and c->d are not on a common face")
    if g.has_label(u):
        raise WouldCreateParallelEdge(f"label {u!r} already used")
    rot = g.rotation()
    _replace(rot, a, b, u)
    _replace(rot, b, a, u)
    _replace(rot, c, d, u)
    _replace(rot, d, c, u)
    rot[u] = [a, d, c, b]
    return from_rotation(rot)


def _apply_4cycle(g: PlaneGraph, op: FourCycleAddition) -> PlaneGraph:
    x, a = op.x, op.a
    if not g.has_label(x) or g.degree(g.index(x)) != 4 or not g.has_label(a):
        raise PatternAbsent("4-cycle addition needs a degree-4 vertex")
    if not g.has_edge(g.index(x), g.index(a)):
        raise PatternAbsent(f"{a!r} is not a neighbour of {x!r}")
    e, f, gg, h = op.new
    if any(g.has_label(v) for v in op.new) or len(set(op.new)) != 4:
        raise WouldCreateParallelEdge("new labels collide")
    a, b, c, d = _rot_from(g, x, a)
    rot = g.rotation()
    rot[x] = [e, f, gg, h]
    rot[e] = [a, f, x, h]
    rot[f] = [b, gg, x, e]
    rot[gg] = [c, h, x, f]
    rot[h] = [d, e, x, gg]
    _replace(rot, a, x, e)
    _replace(rot, b, x, f)
    _replace(rot, c, x, gg)
    _replace(rot, d, x, h)
    return from_rotation(rot)


def slide_roles(g: PlaneGraph, u, a) -> tuple | None:
    """Roles ``(a, b, c, d)`` if ``u``'s rotation from ``a`` fits a 3-cycle slide."""
    iu = g.index(u)
    if g.degree(iu) != 4 or not g.has_label(a) or not g.has_edge(iu, g.index(a)):
        return None
    a, b, c, d = _rot_from(g, u, a)
    ia, id_ = g.index(a), g.index(d)
    if not g.has_edge(ia, id_):
        return None
    # d -> u -> a -> d must be a triangular face
    if g.next_in_face(iu, ia) != (ia, id_):
        return None
    return a, b, c, d


def _apply_slide(g: PlaneGraph, op: ThreeCycleSlide) -> PlaneGraph:
    u = op.u
    if not g.has_label(u):
        raise PatternAbsent("unknown vertex")
    roles = slide_roles(g, u, op.a)
    if roles is None:
        raise PatternAbsent("no triangular face d-u-a with edge ad")
    a, b, c, d = roles
    x, y, z = op.new
    if any(g.has_label(v) for v in op.new) or len(set(op.new)) != 3:
        raise WouldCreateParallelEdge("new labels collide")
    rot = g.rotation()
    del rot[u]
    rot[x] = [a, y, z, d]
    rot[y] = [a, b, z, x]
    rot[z] = [d, x, y, c]
    # a: d -> x, u -> y ; d: a -> x, u -> z
    _replace(rot, a, d, x)
    _replace(rot, a, u, y)
    _replace(rot, d, a, x)
    _replace(rot, d, u, z)
    _replace(rot, b, u, y)
    _replace(rot, c, u, z)
    return from_rotation(rot)


# ---------------------------------------------------------------------------
# enumerating forward operations


def _fresh(g: PlaneGraph, count: int, base: str = "n") -> tuple:
    out = []
    for _ in range(count):
        out.append(g.fresh_label(base, avoid=out))
    return tuple(out)


def peggings(g: PlaneGraph, special: bool = False) -> Iterator[Pegging]:
    """All pegging patterns in canonical (face, position) order."""
    (u,) = _fresh(g, 1, "u")
    L = g.labels
    seen = set()
    for face in g.face_darts():
        for i, (a, b) in enumerate(face):
            for (c, d) in face[i + 1:]:
                if len({a, b, c, d}) != 4:
                    continue
                for (p, q, r, s) in ((a, b, c, d), (c, d, a, b)):
                    if not special and not g.has_edge(q, r):
                        continue
                    key = frozenset(((p, q), (r, s)))
                    if key in seen:
                        continue
                    seen.add(key)
                    yield Pegging(L[p], L[q], L[r], L[s], u, special)


def four_cycle_additions(g: PlaneGraph) -> Iterator[FourCycleAddition]:
    new = _fresh(g, 4, "w")
    for x in range(g.n):
        if g.degree(x) == 4:
            yield FourCycleAddition(g.labels[x], g.labels[g.rot[x][0]], new)


def three_cycle_slides(g: PlaneGraph) -> Iterator[ThreeCycleSlide]:
    new = _fresh(g, 3, "s")
    for u in range(g.n):
        if g.degree(u) != 4:
            continue
        for a in g.rot[u]:
            if slide_roles(g, g.labels[u], g.labels[a]) is not None:
                yield ThreeCycleSlide(g.labels[u], g.labels[a], new)


def expansions(g: PlaneGraph) -> Iterator[ExpansionOp]:
    yield from peggings(g)
    yield from four_cycle_additions(g)
    yield from three_cycle_slides(g)


# ---------------------------------------------------------------------------
# reductions


def _in_class(h: PlaneGraph) -> bool:
    return h.is_quartic() and euler_ok(h) and is_3_connected(h)


def unpeg(g: PlaneGraph, u, pairing: int, special: bool = False, name=None) -> ReductionStep | None:
    """Remove degree-4 vertex ``u`` joining its neighbours in pairs.

    ``pairing`` 0 joins rotation slots (0,3) and (1,2); 1 joins (1,0) and
    (2,3).  Returns None if the result is not simple or the path condition
    fails.
    """
    iu = g.index(u)
    r = [g.labels[w] for w in g.rot[iu]]
    if len(r) != 4:
        return None
    if pairing:
        r = r[1:] + r[:1]
    a, d, c, b = r
    ia, ib, ic, id_ = (g.index(v) for v in (a, b, c, d))
    if g.has_edge(ia, ib) or g.has_edge(ic, id_):
        return None
    if not special and not g.has_edge(ib, ic):
        # the rotation read from the opposite slot gives the same pegging
        if not g.has_edge(ia, id_):
            return None
        a, b, c, d = c, d, a, b
    rot = g.rotation()
    del rot[u]
    _replace(rot, a, u, b)
    _replace(rot, b, u, a)
    _replace(rot, c, u, d)
    _replace(rot, d, u, c)
    h = from_rotation(rot)
    return ReductionStep(Pegging(a, b, c, d, u, special), h)


def remove_four_cycle(g: PlaneGraph, x) -> ReductionStep | None:
    """Inverse of a 4-cycle addition centred at ``x``."""
    ix = g.index(x)
    if g.degree(ix) != 4:
        return None
    nb = [g.labels[w] for w in g.rot[ix]]
    e, f, gg, h = nb
    outer = []
    for i, v in enumerate(nb):
        iv = g.index(v)
        if g.degree(iv) != 4:
            return None
        rv = _rot_from(g, v, x)
        # expected rotation from x: (x, prev, outer, next)
        prev, nxt = nb[i - 1], nb[(i + 1) % 4]
        if rv[1] != prev or rv[3] != nxt:
            return None
        outer.append(rv[2])
    if len(set(outer)) != 4 or set(outer) & set(nb) or x in outer:
        return None
    rot = g.rotation()
    for v in nb:
        del rot[v]
    for v, o in zip(nb, outer):
        _replace(rot, o, v, x)
    rot[x] = list(outer)
    hgr = from_rotation(rot)
    step = ReductionStep(FourCycleAddition(x, outer[0], (e, f, gg, h)), hgr)
    return step


def unslide(g: PlaneGraph, x, y, name=None) -> ReductionStep | None:
    """Inverse of a 3-cycle slide: ``x`` with consecutive triangle ``y, z``."""
    ix, iy = g.index(x), g.index(y)
    if g.degree(ix) != 4:
        return None
    a, y_, z, d = _rot_from(g, x, g.labels[g.rot[ix][(g.slot(ix, iy) - 1) % 4]])
    iz = g.index(z)
    if not g.has_edge(iy, iz):
        return None
    ry = _rot_from(g, y, a) if g.has_edge(iy, g.index(a)) else None
    rz = _rot_from(g, z, d) if g.has_edge(iz, g.index(d)) else None
    if ry is None or rz is None:
        return None
    if ry != [a, ry[1], z, x] or rz != [d, x, y, rz[3]]:
        return None
    b, c = ry[1], rz[3]
    if len({a, b, c, d, x, y, z}) != 7:
        return None
    if g.has_edge(g.index(a), g.index(d)):
        return None
    u = name if name is not None else g.fresh_label("u")
    rot = g.rotation()
    for v in (x, y, z):
        del rot[v]
    _replace(rot, a, x, d)
    _replace(rot, a, y, u)
    _replace(rot, d, x, a)
    _replace(rot, d, z, u)
    _replace(rot, b, y, u)
    _replace(rot, c, z, u)
    rot[u] = [a, b, c, d]
    h = from_rotation(rot)
    return ReductionStep(ThreeCycleSlide(u, a, (x, y, z)), h)


def all_reductions(g: PlaneGraph, check_class: bool = True) -> list[ReductionStep]:
    """Every inverse operation whose result stays in the class."""
    out: list[ReductionStep] = []
    L = g.labels
    for v in range(g.n):
        for p in (0, 1):
            st = unpeg(g, L[v], p)
            if st is not None:
                out.append(st)
    for v in range(g.n):
        st = remove_four_cycle(g, L[v])
        if st is not None:
            out.append(st)
    for v in range(g.n):
        for w in g.rot[v]:
            st = unslide(g, L[v], L[w])
            if st is not None:
                out.append(st)
    if check_class:
        out = [s for s in out if _in_class(s.reduced)]
    return out


def find_reductions(g: PlaneGraph) -> list[ReductionStep]:
    """Reductions of a 3-connected quartic plane graph within the class.

    Each step is verified by re-applying the forward operation.
    """
    steps = []
    for st in all_reductions(g):
        back = apply(st.reduced, st.op)
        if not back.same_embedding(g):
            continue
        steps.append(st)
    return steps


def iter_reductions(g: PlaneGraph) -> Iterator[ReductionStep]:
    """Lazily yield verified in-class reductions.

    4-cycle removals come first, then 3-cycle unslides, then unpeggings:
    the lifts for the first two are the cheapest.
    """
    L = g.labels

    def gen():
        for v in range(g.n):
            yield remove_four_cycle(g, L[v])
        for v in range(g.n):
            for w in g.rot[v]:
                yield unslide(g, L[v], L[w])
        for v in range(g.n):
            for p in (0, 1):
                yield unpeg(g, L[v], p)

    for st in gen():
        if st is None or not _in_class(st.reduced):
            continue
        if apply(st.reduced, st.op).same_embedding(g):
            yield st


def is_antiprism(g: PlaneGraph) -> bool:
    if g.n % 2 or g.n < 6 or not g.is_quartic():
        return False
    return canonical_code(g) == canonical_code(antiprism(g.n // 2))


# ---------------------------------------------------------------------------
# generation


def generate(n_max: int, jobs: int = 1) -> dict[int, list[PlaneGraph]]:
    """All 3-connected quartic plane graphs with at most ``n_max`` vertices.

    Breadth-first by vertex count from the antiprisms; duplicates are
    rejected by canonical code.  Returns graphs grouped by order.
    """
    if n_max < 6:
        raise ValueError("n_max must be at least 6")
    levels: dict[int, dict[bytes, PlaneGraph]] = {n: {} for n in range(6, n_max + 1)}
    lock = Lock()

    def add(h: PlaneGraph) -> None:
        if h.n > n_max or not _in_class(h):
            return
        code = canonical_code(h)
        with lock:
            levels[h.n].setdefault(code, _normalise(h))

    for k in range(3, n_max // 2 + 1):
        add(antiprism(k))

    def expand(g: PlaneGraph) -> None:
        for op in peggings(g):
            add(apply(g, op))
        if g.n + 4 <= n_max:
            for op in four_cycle_additions(g):
                add(apply(g, op))
        if g.n + 2 <= n_max:
            for op in three_cycle_slides(g):
                add(apply(g, op))

    for n in range(6, n_max + 1):
        current = list(levels[n].values())
        if n == n_max:
            break
        if jobs > 1:
            with ThreadPoolExecutor(jobs) as ex:
                list(ex.map(expand, current))
        else:
            for g in current:
                expand(g)
    return {n: list(levels[n].values()) for n in levels}


def _normalise(g: PlaneGraph) -> PlaneGraph:
    """Relabel to 0..n-1 in canonical order for stable output."""
    from .plane_graph import canonical_labeling

    _, order = canonical_labeling(g)
    pos = {v: i for i, v in enumerate(order)}
    rot = [None] * g.n
    for v in range(g.n):
        rot[pos[v]] = [pos[w] for w in g.rot[v]]
    return PlaneGraph(rot)


def count(n: int) -> int:
    return len(generate(max(n, 6)).get(n, []))
