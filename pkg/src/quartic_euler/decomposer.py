"""Path decompositions with prescribed lengths, cut from good circuits.

A ``P_(L, v)``-decomposition is a sequence of edge-disjoint paths of
lengths ``L`` which, stitched end to end, form an Eulerian circuit starting
and ending at ``v``.  Any window of at most four consecutive edges of a good
circuit is a path, so cutting a good circuit at the prefix sums of ``L``
works whenever every length is at most 4.  Graphs containing F6 are handled
by replacing each copy with an F6-free gadget, solving, and filling each
copy back in with one of two fixed F6 trails picked by the local lengths.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .generation import antiprism
from .obstructions import F6_ADJ, find_f6, is_octahedron, monomorphisms
from .oracle import Verdict, verify_circuit
from .plane_graph import GraphError, PlaneGraph, Trail, euler_ok, from_rotation, require_quartic
from .solver import GoodCircuit, good_circuit
from .solver.common import rotate_to

F6_CIRCUITS = ("xadbxcyabcdy", "xadbcyabxcdy")
OCTAHEDRON_CIRCUITS = ("xadcbxydbaycx", "xcyabdyxbcdax")
OCTAHEDRON_FALLBACK = "xadbcyxbaydcx"
OCT_ADJ = {v: set(ns) | ({"y"} if v == "x" else {"x"} if v == "y" else set()) for v, ns in F6_ADJ.items()}
# the automorphism of F6 swapping its two degree-3 vertices
F6_SWAP = {"x": "y", "y": "x", "b": "d", "d": "b", "a": "a", "c": "c"}
# and the one exchanging the two common neighbours of x and y
F6_AC = {"a": "c", "c": "a"}


class DecompositionError(ValueError):
    pass


class LengthMismatch(DecompositionError):
    pass


class StartVertexAbsent(DecompositionError):
    pass


class BadLengths(DecompositionError):
    pass


class DisconnectedGraph(DecompositionError):
    pass


@dataclass(frozen=True)
class PathDecomposition:
    paths: tuple
    start: object

    def circuit(self) -> tuple:
        """The Eulerian circuit obtained by stitching the paths."""
        out = [self.start]
        for p in self.paths:
            out.extend(p[1:])
        return tuple(out)

    def lengths(self) -> tuple:
        return tuple(len(p) - 1 for p in self.paths)

    def __str__(self) -> str:
        return "\n".join(" ".join(map(str, p)) for p in self.paths)


@dataclass(frozen=True)
class UnderlinedPattern:
    """Lengths with some positions marked as not subdividable."""

    lengths: tuple
    underlined: frozenset = frozenset()

    @classmethod
    def parse(cls, text: str) -> "UnderlinedPattern":
        """``"3,_4,4"`` marks the middle entry."""
        vals, marks = [], set()
        for i, tok in enumerate(t.strip() for t in text.split(",")):
            if tok.startswith("_"):
                marks.add(i)
                tok = tok[1:]
            vals.append(int(tok))
        return cls(tuple(vals), frozenset(marks))


def is_subdivision(lengths: Sequence[int], pattern: UnderlinedPattern) -> bool:
    """Can ``lengths`` be reached by splitting non-underlined entries of ``pattern``?

    The pattern boundaries must all be prefix sums of ``lengths``, and an
    underlined entry must survive as a single length.
    """
    groups: list[list[int]] = []
    it = iter(lengths)
    for want in pattern.lengths:
        grp, total = [], 0
        while total < want:
            nxt = next(it, None)
            if nxt is None:
                return False
            grp.append(nxt)
            total += nxt
        if total != want:
            return False
        groups.append(grp)
    if next(it, None) is not None:
        return False
    return all(len(groups[i]) == 1 for i in pattern.underlined)


def _check_lengths(lengths: Sequence[int], total: int) -> None:
    if any(not isinstance(l, int) or l < 1 or l > 4 for l in lengths):
        raise BadLengths("lengths must lie in 1..4")
    if sum(lengths) != total:
        raise LengthMismatch(f"lengths sum to {sum(lengths)}, need {total}")


def _slice(seq: Sequence, lengths: Sequence[int]) -> tuple:
    paths, pos = [], 0
    for l in lengths:
        paths.append(tuple(seq[pos:pos + l + 1]))
        pos += l
    return tuple(paths)


def _all_paths(paths) -> bool:
    return all(len(set(p)) == len(p) for p in paths)


def cut_circuit(circuit: Trail | Sequence, lengths: Sequence[int], v) -> PathDecomposition:
    """Slice a good circuit, rotated to start at ``v``, at the prefix sums of ``lengths``."""
    seq = tuple(circuit.vertices if isinstance(circuit, Trail) else circuit)
    m = len(seq) - 1
    if v not in seq:
        raise StartVertexAbsent(f"{v!r} is not on the circuit")
    if any(l < 1 or l > 4 for l in lengths):
        raise BadLengths("lengths must lie in 1..4")
    if sum(lengths) != m:
        raise LengthMismatch(f"lengths sum to {sum(lengths)}, circuit has {m} edges")
    paths = _slice(rotate_to(seq, v), lengths)
    # a window of at most four edges of a good circuit never closes up
    assert _all_paths(paths), "slice of a good circuit is not a path"
    return PathDecomposition(paths, v)


def f6_decomposition(lengths: Sequence[int]) -> PathDecomposition:
    """A decomposition of F6 (in its standard labels) from ``x`` to ``y``."""
    _check_lengths(lengths, 11)
    return PathDecomposition(_slice(_f6_trail(lengths), lengths), "x")


def _f6_trail(lengths: Sequence[int]) -> str:
    if is_subdivision(lengths, UnderlinedPattern((3, 4, 4), frozenset({1}))):
        return F6_CIRCUITS[0]
    return F6_CIRCUITS[1]


def octahedron_decomposition(lengths: Sequence[int], v="x", g: PlaneGraph | None = None) -> PathDecomposition:
    """Decomposition of the octahedron from ``v``.

    Without ``g`` the standard labels are used; otherwise the circuits are
    transported along an isomorphism sending ``x`` to ``v``.
    """
    _check_lengths(lengths, 12)
    if is_subdivision(lengths, UnderlinedPattern((3, 4, 5), frozenset({1}))):
        circ = OCTAHEDRON_CIRCUITS[0]
    elif is_subdivision(lengths, UnderlinedPattern((5, 4, 3), frozenset({1}))):
        circ = OCTAHEDRON_CIRCUITS[1]
    else:
        circ = OCTAHEDRON_FALLBACK
    if g is None:
        if v not in "xyabcd":
            raise StartVertexAbsent(f"{v!r} is not an octahedron vertex")
        m = _octahedron_self_map(v)
    else:
        if not g.has_label(v):
            raise StartVertexAbsent(f"{v!r} is not a vertex")
        mm = next(monomorphisms(OCT_ADJ, g, fixed={"x": g.index(v)}))
        m = {k: g.labels[w] for k, w in mm.items()}
    seq = [m[c] for c in circ]
    return PathDecomposition(_slice(seq, lengths), v)


@lru_cache(maxsize=None)
def _octahedron_graph() -> PlaneGraph:
    import networkx as nx

    from .formats import embed_networkx

    return embed_networkx(nx.Graph([(a, b) for a, ns in OCT_ADJ.items() for b in ns]))


def _octahedron_self_map(v) -> dict:
    if v == "x":
        return {k: k for k in OCT_ADJ}
    g = _octahedron_graph()
    mm = next(monomorphisms(OCT_ADJ, g, fixed={"x": g.index(v)}))
    return {k: g.labels[w] for k, w in mm.items()}


# ---------------------------------------------------------------------------
# gadget replacement


@lru_cache(maxsize=None)
def _gadget_rotation() -> tuple[dict, str, str]:
    """The 4-antiprism minus one edge; returns (rotation, end1, end2)."""
    g = antiprism(4)
    rot = g.rotation()
    p = next(iter(rot))
    q = rot[p][0]
    return rot, p, q


@dataclass(frozen=True)
class _Copy:
    vmap: dict          # F6 label -> host label
    ends: tuple         # gadget labels standing for x and y
    gadget: frozenset


def _replace_copies(g: PlaneGraph, guard: int | None = None) -> tuple[PlaneGraph, list[_Copy]]:
    """Swap every F6 copy for a gadget, greedily, until none is left."""
    copies: list[_Copy] = []
    guard = guard if guard is not None else g.n
    cur = g
    taken = set(g.labels)
    for step in range(guard + 1):
        m = find_f6(cur)
        if m is None:
            return cur, copies
        if step == guard:
            break
        if any(m[k] in c.gadget for c in copies for k in m):
            raise GraphError("F6 copy overlaps a gadget")
        cur, copy = _splice_gadget(cur, m, len(copies), taken)
        copies.append(copy)
    raise GraphError(f"F6 replacement did not terminate within {guard} steps")


def _splice_gadget(g: PlaneGraph, m: dict, k: int, taken: set) -> tuple[PlaneGraph, _Copy]:
    grot, p, q = _gadget_rotation()
    x, y = m["x"], m["y"]
    inside = set(m.values())
    (s,) = [g.labels[w] for w in g.rot[g.index(x)] if g.labels[w] not in inside]
    (t,) = [g.labels[w] for w in g.rot[g.index(y)] if g.labels[w] not in inside]
    names = {}
    for lab in grot:
        nm = f"g{k}{lab}"
        while nm in taken:
            nm += "'"
        taken.add(nm)
        names[lab] = nm
    for mirror in (False, True):
        rot = {v: list(ns) for v, ns in g.rotation().items() if v not in inside}
        for lab, ns in grot.items():
            r = [names[w] for w in ns]
            rot[names[lab]] = r[::-1] if mirror else r
        rp, rq = rot[names[p]], rot[names[q]]
        rp[rp.index(names[q])] = s
        rq[rq.index(names[p])] = t
        rs = rot[s]
        rs[rs.index(x)] = names[p]
        rt = rot[t]
        rt[rt.index(y)] = names[q]
        h = from_rotation(rot)
        if euler_ok(h):
            return h, _Copy(dict(m), (names[p], names[q]), frozenset(names.values()))
    raise GraphError("gadget does not fit the embedding")


@lru_cache(maxsize=64)
def _plan(g: PlaneGraph) -> tuple:
    """The solved circuit, or the gadget circuit with its F6 copies; shared across calls."""
    out = good_circuit(g)
    if isinstance(out, GoodCircuit):
        return "circuit", out.trail
    gp, copies = _replace_copies(g)
    res = good_circuit(gp)
    if not isinstance(res, GoodCircuit):
        raise GraphError("gadget graph still contains F6")
    return "gadget", res.trail.vertices, tuple(copies)


def _window(lengths: Sequence[int], pos: int, size: int) -> list[int]:
    """The length vector describing edges ``pos .. pos+size`` of the cut."""
    out, acc = [], 0
    for l in lengths:
        lo, hi = acc, acc + l
        acc = hi
        a, b = max(lo, pos), min(hi, pos + size)
        if a < b:
            out.append(b - a)
    return out


def _rebuild(copies: list[_Copy], circ: Sequence, lengths: Sequence[int]) -> list:
    """Map a circuit of the gadget graph back, filling each copy by its window."""
    where = {}
    for c in copies:
        for v in c.gadget:
            where[v] = c
    out = [None]
    i = 0
    seq = list(circ)
    L = len(seq) - 1
    while i < L:
        p, q = seq[i], seq[i + 1]
        cp, cq = where.get(p), where.get(q)
        if cp is not None and cq is cp:
            # inside a gadget: skip to where the circuit leaves it
            j = i
            while j < L and where.get(seq[j + 1]) is cp:
                j += 1
            entry = "x" if p == cp.ends[0] else "y"
            vmap = cp.vmap if entry == "x" else {k: cp.vmap[F6_SWAP[k]] for k in cp.vmap}
            trail = _f6_trail(_window(lengths, len(out) - 1, 11))
            body = [vmap[ch] for ch in trail]
            if out[-1] is None:
                out[-1] = body[0]
            out.extend(body[1:])
            i = j
            continue
        a = cp.vmap["x" if p == cp.ends[0] else "y"] if cp is not None else p
        b = cq.vmap["x" if q == cq.ends[0] else "y"] if cq is not None else q
        if out[-1] is None:
            out[-1] = a
        out.append(b)
        i += 1
    return out


def p_decomposition(g: PlaneGraph, lengths: Sequence[int], v) -> PathDecomposition:
    """A decomposition of ``g`` into paths of the given lengths starting at ``v``."""
    require_quartic(g)
    lengths = list(lengths)
    _check_lengths(lengths, g.m)
    if not g.has_label(v):
        raise StartVertexAbsent(f"{v!r} is not a vertex")
    if not g.is_connected():
        raise DisconnectedGraph("graph is not connected")
    if is_octahedron(g):
        return _checked(g, octahedron_decomposition(lengths, v, g), lengths, v)
    plan = _plan(g)
    if plan[0] == "circuit":
        return _checked(g, cut_circuit(plan[1], lengths, v), lengths, v)
    _, circ, copies = plan
    copies = list(copies)
    start, lead, shift, first = v, lengths, 0, None
    for k, c in enumerate(copies):
        inv = {h: r for r, h in c.vmap.items()}
        role = inv.get(v)
        if role is None:
            continue
        if role == "b":
            # swapping x and y turns b into d
            c = _Copy({r: c.vmap[F6_SWAP[r]] for r in c.vmap}, c.ends[::-1], c.gadget)
            role = F6_SWAP[role]
        if role == "c":
            c = _Copy({r: c.vmap[F6_AC.get(r, r)] for r in c.vmap}, c.ends, c.gadget)
            role = "a"
        copies[k] = c
        if role == "a":
            # both F6 trails open with xa: start at x and rotate one edge on
            start, first, shift = c.ends[0], True, 1
            lead = [1] + lengths
        elif role == "d":
            # ... and close with dy
            start, first, shift = c.ends[1], False, -1
            lead = ([lengths[0] - 1] if lengths[0] > 1 else []) + lengths[1:] + [1]
        else:
            start = c.ends[0] if role == "x" else c.ends[1]
        break
    own = next((c.gadget for c in copies if start in c.gadget), frozenset())
    seq = _rotate_at_boundary(circ, start, own, first)
    seq = _rebuild(copies, seq, lead)
    if shift:
        body = seq[:-1]
        body = body[shift:] + body[:shift]
        seq = body + body[:1]
    return _checked(g, PathDecomposition(_slice(seq, lengths), v), lengths, v)


def _rotate_at_boundary(circ: Sequence, start, gadget: set, first: bool | None) -> list:
    """Rotate to an occurrence of ``start`` where the circuit crosses a gadget boundary.

    ``first`` asks for the gadget to be traversed first (True) or last
    (False); None accepts either.
    """
    if start not in gadget:
        return list(rotate_to(circ, start))
    b = list(circ[:-1])
    n = len(b)
    for seq in (b, b[::-1]):
        for i, w in enumerate(seq):
            if w != start:
                continue
            prv, nxt = seq[i - 1], seq[(i + 1) % n]
            if first is True and (prv in gadget or nxt not in gadget):
                continue
            if first is False and (nxt in gadget or prv not in gadget):
                continue
            if first is None and prv in gadget and nxt in gadget:
                continue
            out = seq[i:] + seq[:i]
            return out + out[:1]
    raise GraphError("circuit never crosses into the gadget at the start vertex")


def _checked(g: PlaneGraph, d: PathDecomposition, lengths, v) -> PathDecomposition:
    ver = verify_decomposition(g, d, lengths, v)
    if not ver:
        raise GraphError(f"decomposition failed verification: {ver.reason}")
    return d


def verify_decomposition(g: PlaneGraph, d: PathDecomposition, lengths: Sequence[int] | None = None,
                         v=None) -> Verdict:
    """Check every property of a path decomposition."""
    paths = [tuple(p) for p in d.paths]
    if not paths:
        return Verdict(g.m == 0, "no paths")
    if lengths is not None and [len(p) - 1 for p in paths] != list(lengths):
        return Verdict(False, "path lengths differ from the requested lengths")
    start = d.start if v is None else v
    if paths[0][0] != start or paths[-1][-1] != start:
        return Verdict(False, f"paths do not start and end at {start!r}")
    for i, p in enumerate(paths):
        if len(p) < 2:
            return Verdict(False, f"path {i} is empty")
        if len(set(p)) != len(p):
            return Verdict(False, f"path {i} repeats a vertex")
        if i and paths[i - 1][-1] != p[0]:
            return Verdict(False, f"path {i} does not continue path {i - 1}")
    circ = d.circuit()
    return verify_circuit(g, circ, 0) if g.m else Verdict(True)
