"""Plane graphs stored as rotation systems.

A :class:`PlaneGraph` keeps, for every vertex, the clockwise cyclic order of
its neighbours.  Vertices are dense integers ``0..n-1`` internally and carry a
hashable label that survives the local surgery done by the solver, so trails
and circuits are usually written in labels.

Face tracing uses the successor rule: the dart ``u -> v`` is followed by
``v -> w`` where ``w`` is the neighbour after ``u`` in the rotation at ``v``.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Hashable, Iterable, Mapping, NamedTuple, Sequence

Label = Hashable
RotationSpec = Mapping[Label, Sequence[Label]]


class GraphError(ValueError):
    """Base class for invalid plane-graph input or operations."""


class InconsistentRotation(GraphError):
    pass


class NotPlanar(GraphError):
    pass


class NotSimple(GraphError):
    pass


class NotCoFacial(GraphError):
    pass


class PendantsAdjacent(GraphError):
    pass


class NotACut(GraphError):
    pass


class NotQuartic(GraphError):
    pass


class Dart(NamedTuple):
    tail: int
    slot: int


class PlaneGraph:
    """Immutable simple plane graph given by a rotation system."""

    __slots__ = ("rot", "labels", "_pos", "_index", "_m")

    def __init__(self, rot: Sequence[Sequence[int]], labels: Sequence[Label] | None = None):
        self.rot: tuple[tuple[int, ...], ...] = tuple(tuple(r) for r in rot)
        n = len(self.rot)
        self.labels: tuple[Label, ...] = tuple(range(n)) if labels is None else tuple(labels)
        if len(self.labels) != n:
            raise GraphError("label count does not match vertex count")
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self._index) != n:
            raise GraphError("duplicate vertex labels")
        self._pos = tuple({w: i for i, w in enumerate(r)} for r in self.rot)
        self._m = sum(len(r) for r in self.rot) // 2

    # basic queries -------------------------------------------------------
    @property
    def n(self) -> int:
        return len(self.rot)

    @property
    def m(self) -> int:
        return self._m

    def __repr__(self) -> str:
        return f"PlaneGraph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PlaneGraph) and self.rot == other.rot and self.labels == other.labels

    def __hash__(self) -> int:
        return hash((self.rot, self.labels))

    def index(self, label: Label) -> int:
        return self._index[label]

    def has_label(self, label: Label) -> bool:
        return label in self._index

    def label(self, v: int) -> Label:
        return self.labels[v]

    def degree(self, v: int) -> int:
        return len(self.rot[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.rot[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._pos[u]

    def slot(self, u: int, v: int) -> int:
        """Position of ``v`` in the rotation at ``u``."""
        return self._pos[u][v]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.rot[u] if u < v]

    def is_quartic(self) -> bool:
        return all(len(r) == 4 for r in self.rot)

    # darts and faces -----------------------------------------------------
    def darts(self) -> list[Dart]:
        return [Dart(u, i) for u in range(self.n) for i in range(len(self.rot[u]))]

    def head(self, d: Dart) -> int:
        return self.rot[d.tail][d.slot]

    def twin(self, d: Dart) -> Dart:
        v = self.rot[d.tail][d.slot]
        return Dart(v, self._pos[v][d.tail])

    def next_in_face(self, u: int, v: int) -> tuple[int, int]:
        """Successor of the dart ``u -> v`` along its face."""
        r = self.rot[v]
        return v, r[(self._pos[v][u] + 1) % len(r)]

    def faces(self) -> list[list[int]]:
        """Face walks as vertex lists (tail of each dart in order).

        An isolated vertex contributes one empty face.
        """
        seen: set[tuple[int, int]] = set()
        out: list[list[int]] = []
        for u in range(self.n):
            if not self.rot[u]:
                out.append([])
                continue
            for v in self.rot[u]:
                if (u, v) in seen:
                    continue
                walk = []
                a, b = u, v
                while (a, b) not in seen:
                    seen.add((a, b))
                    walk.append(a)
                    a, b = self.next_in_face(a, b)
                out.append(walk)
        return out

    def face_darts(self) -> list[list[tuple[int, int]]]:
        seen: set[tuple[int, int]] = set()
        out = []
        for u in range(self.n):
            for v in self.rot[u]:
                if (u, v) in seen:
                    continue
                walk = []
                a, b = u, v
                while (a, b) not in seen:
                    seen.add((a, b))
                    walk.append((a, b))
                    a, b = self.next_in_face(a, b)
                out.append(walk)
        return out

    # conversions ---------------------------------------------------------
    def rotation(self) -> dict[Label, list[Label]]:
        """Rotation system keyed by labels (a fresh mutable copy)."""
        L = self.labels
        return {L[v]: [L[w] for w in self.rot[v]] for v in range(self.n)}

    def adjacency(self) -> dict[Label, set[Label]]:
        L = self.labels
        return {L[v]: {L[w] for w in self.rot[v]} for v in range(self.n)}

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(self.labels)
        g.add_edges_from((self.labels[u], self.labels[v]) for u, v in self.edges())
        return g

    def same_embedding(self, other: "PlaneGraph") -> bool:
        """Same labels and the same cyclic rotation at every vertex."""
        if set(self.labels) != set(other.labels):
            return False
        for v in range(self.n):
            lab = self.labels[v]
            r = [self.labels[w] for w in self.rot[v]]
            s = [other.labels[w] for w in other.rot[other.index(lab)]]
            if len(r) != len(s):
                return False
            if r and not any(r == s[i:] + s[:i] for i in range(len(s))):
                return False
        return True

    def relabeled(self, mapping: Mapping[Label, Label]) -> "PlaneGraph":
        return PlaneGraph(self.rot, [mapping.get(x, x) for x in self.labels])

    def mirror(self) -> "PlaneGraph":
        return PlaneGraph([tuple(reversed(r)) for r in self.rot], self.labels)

    def fresh_label(self, base: str = "v", avoid: Iterable[Label] = ()) -> Label:
        taken = set(avoid)
        if base not in self._index and base not in taken:
            return base
        k = 1
        while True:
            cand = f"{base}{k}"
            if cand not in self._index and cand not in taken:
                return cand
            k += 1

    # connectivity --------------------------------------------------------
    def components(self, removed: Iterable[int] = (), removed_edges: Iterable[tuple[int, int]] = ()) -> list[list[int]]:
        gone = set(removed)
        bad = set()
        for u, v in removed_edges:
            bad.add((u, v))
            bad.add((v, u))
        seen = set(gone)
        comps = []
        for s in range(self.n):
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            dq = deque([s])
            while dq:
                u = dq.popleft()
                for w in self.rot[u]:
                    if w not in seen and (u, w) not in bad:
                        seen.add(w)
                        comp.append(w)
                        dq.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n == 0 or len(self.components()) == 1


def _check_simple_consistent(rot: Sequence[Sequence[int]]) -> None:
    for u, r in enumerate(rot):
        if u in r:
            raise NotSimple(f"loop at vertex {u}")
        if len(set(r)) != len(r):
            raise NotSimple(f"parallel edges at vertex {u}")
        for w in r:
            if not (0 <= w < len(rot)) or u not in rot[w]:
                raise InconsistentRotation(f"vertex {u} lists {w} but not conversely")


def euler_ok(g: PlaneGraph) -> bool:
    """Check V - E + F = 2 on every component."""
    faces = g.face_darts()
    comp_id = {}
    comps = g.components()
    for i, comp in enumerate(comps):
        for v in comp:
            comp_id[v] = i
    fcount = [0] * len(comps)
    for f in faces:
        fcount[comp_id[f[0][0]]] += 1
    for i, comp in enumerate(comps):
        e = sum(len(g.rot[v]) for v in comp) // 2
        f = fcount[i] if e else 1
        if len(comp) - e + f != 2:
            return False
    return True


def build(spec: RotationSpec | Sequence[Sequence[int]], *, check_planar: bool = True) -> PlaneGraph:
    """Validate a rotation system and return the plane graph.

    ``spec`` is either a mapping from labels to clockwise neighbour lists or a
    sequence of neighbour lists indexed by vertex number.
    """
    if isinstance(spec, Mapping):
        labels = list(spec.keys())
        idx = {lab: i for i, lab in enumerate(labels)}
        try:
            rot = [[idx[w] for w in spec[lab]] for lab in labels]
        except KeyError as exc:
            raise InconsistentRotation(f"unknown neighbour {exc.args[0]!r}") from None
    else:
        labels = None
        rot = [list(r) for r in spec]
    _check_simple_consistent(rot)
    g = PlaneGraph(rot, labels)
    if check_planar and not euler_ok(g):
        raise NotPlanar("rotation system has positive genus")
    return g


def require_quartic(g: PlaneGraph) -> None:
    if g.n == 0:
        raise NotQuartic("empty graph")
    bad = [g.labels[v] for v in range(g.n) if g.degree(v) != 4]
    if bad:
        raise NotQuartic(f"vertices of degree != 4: {bad[:5]}")


def from_rotation(rot: Mapping[Label, Sequence[Label]]) -> PlaneGraph:
    """Build without the planarity check (for trusted local surgery)."""
    return build(rot, check_planar=False)


# ---------------------------------------------------------------------------
# trails


@dataclass(frozen=True)
class Trail:
    """A trail written as its vertex sequence (labels).

    For a closed trail the first vertex is repeated at the end.
    """

    vertices: tuple
    closed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if self.closed and self.vertices and self.vertices[0] != self.vertices[-1]:
            raise ValueError("closed trail must end where it starts")

    def __len__(self) -> int:
        return max(len(self.vertices) - 1, 0)

    @property
    def start(self):
        return self.vertices[0]

    @property
    def end(self):
        return self.vertices[-1]

    def edges(self) -> list[frozenset]:
        v = self.vertices
        return [frozenset((v[i], v[i + 1])) for i in range(len(v) - 1)]

    def darts(self) -> list[tuple]:
        v = self.vertices
        return [(v[i], v[i + 1]) for i in range(len(v) - 1)]

    def reversed(self) -> "Trail":
        return Trail(tuple(reversed(self.vertices)), self.closed)

    def rotated_to(self, vertex) -> "Trail":
        """Closed trail restarted at the first occurrence of ``vertex``."""
        if not self.closed:
            raise ValueError("only closed trails can be rotated")
        body = list(self.vertices[:-1])
        i = body.index(vertex)
        body = body[i:] + body[:i]
        return Trail(tuple(body) + (body[0],), True)

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.vertices)


# ---------------------------------------------------------------------------
# splitting, identification, completion


def split_vertex(g: PlaneGraph, v: Label, names: Sequence[Label] | None = None) -> tuple[PlaneGraph, list[Label]]:
    """Replace ``v`` by one pendant per incident edge.

    The pendant that inherits the edge to ``rot[v][i]`` is returned in
    position ``i``; each neighbour keeps the pendant in the slot ``v`` had.
    """
    rot = g.rotation()
    nbrs = rot.pop(v)
    if names is None:
        names = []
        for i in range(len(nbrs)):
            names.append(g.fresh_label(f"{v}_", avoid=names))
    pendants = list(names)
    for w, p in zip(nbrs, pendants):
        rw = rot[w]
        rw[rw.index(v)] = p
        rot[p] = [w]
    return from_rotation(rot), pendants


def _face_with(g: PlaneGraph, vs: Sequence[int]) -> list[int] | None:
    need = set(vs)
    for f in g.faces():
        if need <= set(f):
            return f
    return None


def identify_pendants(g: PlaneGraph, group: Sequence[Label], name: Label | None = None) -> PlaneGraph:
    """Merge co-facial pendant vertices into a single vertex.

    The rotation at the merged vertex is the reverse of the order in which
    the pendants are met along their common face, which undoes
    :func:`split_vertex`.
    """
    idx = [g.index(p) for p in group]
    for p in idx:
        if g.degree(p) != 1:
            raise GraphError(f"{g.labels[p]!r} is not a pendant")
    face = _face_with(g, idx)
    if face is None:
        raise NotCoFacial("pendants do not share a face")
    order = [w for w in face if w in set(idx)]
    order.reverse()
    rot = g.rotation()
    new = name if name is not None else group[0]
    if new in rot and new not in group:
        raise GraphError(f"label {new!r} already in use")
    merged = []
    for p in order:
        lab = g.labels[p]
        w = rot.pop(lab)[0]
        merged.append(w)
    for p in order:
        lab = g.labels[p]
        w = g.labels[g.rot[p][0]]
        rw = rot[w]
        rw[rw.index(lab)] = new
    rot[new] = merged
    if len(set(merged)) != len(merged):
        raise NotSimple("identification creates parallel edges")
    return from_rotation(rot)


def complete_into_quartic(g: PlaneGraph, name: Label | None = None) -> tuple[PlaneGraph, Label]:
    """Add an apex ``z`` over the four co-facial pendants plus a 4-cycle.

    Every face around ``z`` becomes a triangle.
    """
    pend = [v for v in range(g.n) if g.degree(v) == 1]
    others = [v for v in range(g.n) if g.degree(v) not in (1, 4)]
    if len(pend) != 4 or others:
        raise GraphError("need exactly four pendants and all other vertices quartic")
    for p, q in combinations(pend, 2):
        if g.has_edge(p, q):
            raise PendantsAdjacent(f"{g.labels[p]!r} and {g.labels[q]!r} are adjacent")
    face = _face_with(g, pend)
    if face is None:
        raise NotCoFacial("pendants do not share a face")
    order = [w for w in face if w in set(pend)]
    L = g.labels
    z = name if name is not None else g.fresh_label("z")
    rot = g.rotation()
    k = len(order)
    for i, p in enumerate(order):
        prev, nxt = L[order[i - 1]], L[order[(i + 1) % k]]
        rot[L[p]] = [L[g.rot[p][0]], prev, z, nxt]
    rot[z] = [L[p] for p in reversed(order)]
    return from_rotation(rot), z


# ---------------------------------------------------------------------------
# cuts


class CutType(enum.Enum):
    A = "a"
    B = "b"
    C = "c"
    D = "d"
    E = "e"


@dataclass(frozen=True)
class VertexCut:
    vertices: tuple[int, ...]
    kind: CutType
    side_a: tuple[int, ...]
    side_b: tuple[int, ...]


@dataclass(frozen=True)
class EdgeCut:
    edges: tuple[tuple[int, int], tuple[int, int]]
    side_a: tuple[int, ...]
    side_b: tuple[int, ...]


@dataclass
class CutReport:
    cutvertices: list[int] = field(default_factory=list)
    two_vertex_cuts: list[VertexCut] = field(default_factory=list)
    two_edge_cuts: list[EdgeCut] = field(default_factory=list)
    edge_connectivity: int = 0


def _sides(g: PlaneGraph, cut: Sequence[int]) -> tuple[list[int], list[int]]:
    comps = g.components(removed=cut)
    if len(comps) < 2:
        raise NotACut(f"{[g.labels[v] for v in cut]} does not separate the graph")
    first = comps[0]
    rest = sorted(v for c in comps[1:] for v in c)
    return first, rest


def classify_2cut(g: PlaneGraph, cut: Iterable[int]) -> tuple[CutType, tuple[int, ...], tuple[int, ...]]:
    """Type of a minimal vertex cut of size one or two, plus its sides.

    Sides include the cut vertices.  The type is read off from how many
    half-edges of each cut vertex go into the interior of the first side:
    (a) 2 and 2, (b) 1 and 1 (or 3 and 3), (c) 1 and 3, (d) cut vertices
    adjacent, (e) a single cutvertex.
    """
    cut = tuple(sorted(cut))
    inner_a, inner_b = _sides(g, cut)
    side_a = tuple(sorted(set(inner_a) | set(cut)))
    side_b = tuple(sorted(set(inner_b) | set(cut)))
    sa = set(inner_a)
    if len(cut) == 1:
        return CutType.E, side_a, side_b
    if len(cut) != 2:
        raise NotACut("only 1- and 2-vertex cuts are classified")
    x, y = cut
    for v in cut:
        if len(g.components(removed=[v])) > 1:
            raise NotACut("cut is not minimal")
    if g.has_edge(x, y):
        return CutType.D, side_a, side_b
    kx = sum(1 for w in g.rot[x] if w in sa)
    ky = sum(1 for w in g.rot[y] if w in sa)
    if kx == 2 and ky == 2:
        kind = CutType.A
    elif kx == ky:
        kind = CutType.B
    else:
        kind = CutType.C
    return kind, side_a, side_b


def connectivity_report(g: PlaneGraph) -> CutReport:
    """Cutvertices, minimal 2-vertex-cuts and 2-edge-cuts by brute force."""
    rep = CutReport()
    if g.n == 0 or not g.is_connected():
        return rep
    for v in range(g.n):
        if len(g.components(removed=[v])) > 1:
            rep.cutvertices.append(v)
    cv = set(rep.cutvertices)
    for x, y in combinations(range(g.n), 2):
        if x in cv or y in cv:
            continue
        if len(g.components(removed=[x, y])) > 1:
            kind, a, b = classify_2cut(g, (x, y))
            rep.two_vertex_cuts.append(VertexCut((x, y), kind, a, b))
    edges = g.edges()
    bridges = [e for e in edges if len(g.components(removed_edges=[e])) > 1]
    for e, f in combinations(edges, 2):
        if e in bridges or f in bridges:
            continue
        comps = g.components(removed_edges=[e, f])
        if len(comps) > 1:
            rep.two_edge_cuts.append(EdgeCut((e, f), tuple(comps[0]), tuple(sorted(v for c in comps[1:] for v in c))))
    if bridges:
        rep.edge_connectivity = 1
    elif rep.two_edge_cuts:
        rep.edge_connectivity = 2
    else:
        rep.edge_connectivity = _edge_connectivity(g)
    return rep


def _edge_connectivity(g: PlaneGraph) -> int:
    import networkx as nx

    if g.n <= 1:
        return 0
    return nx.edge_connectivity(g.to_networkx())


def is_3_connected(g: PlaneGraph) -> bool:
    if g.n < 4 or not g.is_connected():
        return False
    for v in range(g.n):
        if len(g.components(removed=[v])) > 1:
            return False
    for x, y in combinations(range(g.n), 2):
        if len(g.components(removed=[x, y])) > 1:
            return False
    return True


def is_3_edge_connected(g: PlaneGraph) -> bool:
    if not g.is_connected():
        return False
    edges = g.edges()
    for e in edges:
        if len(g.components(removed_edges=[e])) > 1:
            return False
    for e, f in combinations(edges, 2):
        if len(g.components(removed_edges=[e, f])) > 1:
            return False
    return True


def induced_subgraph(g: PlaneGraph, vertices: Iterable[int]) -> PlaneGraph:
    """Restrict the rotation system to a vertex subset (stays plane)."""
    keep = set(vertices)
    L = g.labels
    rot = {L[v]: [L[w] for w in g.rot[v] if w in keep] for v in sorted(keep)}
    return from_rotation(rot)


# ---------------------------------------------------------------------------
# canonical form


def _bfs_code(g: PlaneGraph, u0: int, v0: int, mirror: bool) -> tuple[list[int], list[int]]:
    num = {u0: 0}
    order = [u0]
    first = {u0: v0}
    code: list[int] = []
    i = 0
    while i < len(order):
        u = order[i]
        i += 1
        r = g.rot[u]
        d = len(r)
        s = g.slot(u, first[u])
        for k in range(d):
            w = r[(s - k) % d] if mirror else r[(s + k) % d]
            if w not in num:
                num[w] = len(order)
                order.append(w)
                first[w] = u
            code.append(num[w] + 1)
        code.append(0)
    return code, order


def canonical_labeling(g: PlaneGraph) -> tuple[tuple[int, ...], list[int]]:
    """Minimal BFS code over all darts and both orientations.

    Returns the code and the vertex order realising it (connected graphs;
    components are handled by :func:`canonical_code`).
    """
    best = None
    best_order: list[int] = []
    for u in range(g.n):
        for v in g.rot[u]:
            for mir in (False, True):
                code, order = _bfs_code(g, u, v, mir)
                if best is None or code < best:
                    best, best_order = code, order
    if best is None:
        return (tuple([0] * g.n)), list(range(g.n))
    return tuple(best), best_order


def canonical_code(g: PlaneGraph) -> bytes:
    """Equal iff the plane graphs are isomorphic up to reflection."""
    parts = []
    for comp in g.components():
        sub = induced_subgraph(g, comp)
        code, _ = canonical_labeling(sub)
        parts.append(code)
    parts.sort()
    flat: list[int] = []
    for p in parts:
        flat.extend(p)
        flat.append(0xFFFF)
    return b"".join(x.to_bytes(2, "big") for x in flat)


def plane_isomorphism(g: PlaneGraph, h: PlaneGraph) -> dict[Label, Label] | None:
    """A label map from ``g`` onto ``h`` preserving the embedding up to reflection."""
    if g.n != h.n or g.m != h.m or not g.is_connected() or not h.is_connected():
        return None
    cg, og = canonical_labeling(g)
    ch, oh = canonical_labeling(h)
    if cg != ch:
        return None
    return {g.labels[a]: h.labels[b] for a, b in zip(og, oh)}
