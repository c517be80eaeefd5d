"""Re-pairing two trails that end at four pendant vertices.

Setting: a graph that is quartic except for four pairwise non-adjacent
pendants ``x1, x2, y1, y2`` whose neighbours satisfy ``a1 != a2`` and
``b1 != b2``, together with two edge-disjoint good trails covering it.  The
result is either an ``(x1,x2)``-trail and a ``(y1,y2)``-trail, both of
length at least 5 (shape ``XX``), or two ``(x_i,y_j)``-trails of length at
least 3 (shape ``XY``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Sequence

from ..oracle import is_locally_self_avoiding
from ..plane_graph import PlaneGraph
from .common import InternalCaseExhaustion, PreconditionViolated

Label = Hashable


@dataclass(frozen=True)
class TrailPair:
    first: tuple
    second: tuple
    x: tuple
    y: tuple
    shape: str  # "XX" or "XY"

    @property
    def trails(self) -> tuple[tuple, tuple]:
        return self.first, self.second


def _edges(t: Sequence) -> list[frozenset]:
    return [frozenset(e) for e in zip(t, t[1:])]


def check_pair(g: PlaneGraph, t1: Sequence, t2: Sequence, k: int = 4) -> str | None:
    """Reason the two trails are not an edge-disjoint good cover, or None."""
    e1, e2 = _edges(t1), _edges(t2)
    all_e = e1 + e2
    if len(set(all_e)) != len(all_e):
        return "trails share or repeat an edge"
    want = {frozenset((g.labels[u], g.labels[v])) for u, v in g.edges()}
    if set(all_e) != want:
        return "trails do not cover the graph"
    for t in (t1, t2):
        if not is_locally_self_avoiding(t, False, k):
            return f"trail {' '.join(map(str, t))} has a short subcycle"
    return None


def _check_input(g: PlaneGraph, t1, t2, xs, ys) -> None:
    pend = list(xs) + list(ys)
    if len(set(pend)) != 4:
        raise PreconditionViolated("pendants must be distinct")
    nb = {}
    for p in pend:
        if not g.has_label(p) or g.degree(g.index(p)) != 1:
            raise PreconditionViolated(f"{p!r} is not a pendant")
        nb[p] = g.labels[g.rot[g.index(p)][0]]
    if nb[xs[0]] == nb[xs[1]] or nb[ys[0]] == nb[ys[1]]:
        raise PreconditionViolated("paired pendants share their neighbour")
    for p in pend:
        if nb[p] in pend:
            raise PreconditionViolated("pendants are adjacent")
    for v in range(g.n):
        if g.labels[v] not in pend and g.degree(v) != 4:
            raise PreconditionViolated(f"{g.labels[v]!r} has degree {g.degree(v)}")
    why = check_pair(g, t1, t2)
    if why:
        raise PreconditionViolated(why)
    ends = sorted([t1[0], t1[-1], t2[0], t2[-1]], key=repr)
    if ends != sorted(pend, key=repr):
        raise PreconditionViolated("trails must end at the four pendants")


def _len(t) -> int:
    return len(t) - 1


def _xy_fix(t1: list, t2: list) -> tuple[list, list] | None:
    """Both trails run x -> y; lengthen a length-2 trail by splitting the other at ``z``."""
    if _len(t1) >= 3 and _len(t2) >= 3:
        return t1, t2
    if _len(t1) < 3 and _len(t2) < 3:
        return None
    if _len(t2) < 3:
        t1, t2 = t2, t1
    if _len(t1) != 2:
        return None
    x1, z, y1 = t1
    if z not in t2[1:-1]:
        return None
    i = t2.index(z, 1)
    return [x1, z] + t2[i + 1:], t2[:i] + [z, y1]


def _xx_to_xy(P: list, Q: list) -> list[tuple[list, list]]:
    """Candidates from ``x1 P x2`` (length 3 or 4) and ``y1 Q y2``."""
    out = []
    x1, x2 = P[0], P[-1]
    for q in (Q, Q[::-1]):
        if _len(P) == 3:
            a1, a2 = P[1], P[2]
            if a1 not in q or a2 not in q or q.index(a1) > q.index(a2):
                continue
            i = q.index(a1)
            out.append(([x1, a1] + q[i + 1:], [x2, a2, a1] + q[:i][::-1]))
        elif _len(P) == 4:
            a1, c, a2 = P[1], P[2], P[3]
            if a1 not in q or a2 not in q or q.index(a1) > q.index(a2):
                continue
            i, j = q.index(a1), q.index(a2)
            ci = q.index(c) if c in q else -1
            A = ([x1, a1] + q[i + 1:j] + [a2] + q[j + 1:], [x2, a2, c, a1] + q[:i][::-1])
            B = ([x1, a1, c, a2] + q[j + 1:], [x2, a2] + q[i + 1:j][::-1] + [a1] + q[:i][::-1])
            if ci > j:
                out.append(A)
            elif 0 <= ci < i:
                out.append(B)
            else:
                out.extend([A, B])
    return out


def rearrange_trails(g: PlaneGraph, t1: Sequence, t2: Sequence, xs: Sequence, ys: Sequence) -> TrailPair:
    """Bring two covering good trails into one of the two standard shapes."""
    xs, ys = tuple(xs), tuple(ys)
    t1, t2 = list(t1), list(t2)
    _check_input(g, t1, t2, xs, ys)
    X, Y = set(xs), set(ys)

    def finish(a: list, b: list) -> TrailPair | None:
        if check_pair(g, a, b):
            return None
        ends_a = {a[0], a[-1]}
        if ends_a == X or ends_a == Y:
            if _len(a) < 5 or _len(b) < 5:
                return None
            if ends_a == Y:
                a, b = b, a
            if a[0] != xs[0]:
                a = a[::-1]
            if b[0] != ys[0]:
                b = b[::-1]
            return TrailPair(tuple(a), tuple(b), xs, ys, "XX")
        if _len(a) < 3 or _len(b) < 3:
            return None
        if a[0] not in X:
            a = a[::-1]
        if b[0] not in X:
            b = b[::-1]
        if a[0] != xs[0]:
            a, b = b, a
        return TrailPair(tuple(a), tuple(b), xs, ys, "XY")

    def as_xy(a: list, b: list) -> list[tuple[list, list]]:
        a = a if a[0] in X else a[::-1]
        b = b if b[0] in X else b[::-1]
        fixed = _xy_fix(a, b)
        return [fixed] if fixed else []

    ends1 = {t1[0], t1[-1]}
    if ends1 == X or ends1 == Y:
        P, Q = (t1, t2) if ends1 == X else (t2, t1)
        if P[0] != xs[0]:
            P = P[::-1]
        if Q[0] != ys[0]:
            Q = Q[::-1]
        if _len(P) >= 5 and _len(Q) >= 5:
            out = finish(P, Q)
            if out:
                return out
        cands = []
        if _len(P) < 5:
            cands += _xx_to_xy(P, Q)
        if _len(Q) < 5:
            cands += _xx_to_xy(Q, P)
        for a, b in cands:
            for fa, fb in as_xy(a, b) + [(a, b)]:
                out = finish(fa, fb)
                if out:
                    return out
        raise InternalCaseExhaustion("no XX -> XY rearrangement verified")
    for fa, fb in as_xy(t1, t2):
        out = finish(fa, fb)
        if out:
            return out
    raise InternalCaseExhaustion("no XY rearrangement verified")
