"""Exhaustive search and verification of locally self-avoiding Eulerian trails.

A trail is *k-locally self-avoiding* when no stretch of at most ``k``
consecutive edges closes up.  For a trail without repeated edges this is the
window test ``v[i] != v[i+j]`` for ``1 <= j <= k`` (indices wrap for closed
trails).  Everything here is independent of the constructive solver and is
used as ground truth by the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Sequence

from .plane_graph import PlaneGraph, Trail


class BudgetExhausted(RuntimeError):
    """The node budget ran out before the search space was exhausted."""


@dataclass(frozen=True)
class SearchConfig:
    k: int = 4
    closed: bool = True
    start: Hashable | None = None
    cap: int | None = None

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("k must be non-negative")


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


# ---------------------------------------------------------------------------
# local checks


def window_violation(seq: Sequence, closed: bool, k: int = 4) -> tuple[int, int] | None:
    """First pair of positions ``(i, i+j)``, ``j <= k``, holding the same vertex."""
    if closed:
        body = list(seq[:-1]) if len(seq) > 1 and seq[0] == seq[-1] else list(seq)
        L = len(body)
        for i in range(L):
            for j in range(1, min(k, L) + 1):
                if body[i] == body[(i + j) % L]:
                    return i, i + j
        return None
    L = len(seq)
    for i in range(L):
        for j in range(1, k + 1):
            if i + j >= L:
                break
            if seq[i] == seq[i + j]:
                return i, i + j
    return None


def is_locally_self_avoiding(seq: Sequence, closed: bool, k: int = 4) -> bool:
    return window_violation(seq, closed, k) is None


def subcycles(seq: Sequence, closed: bool) -> list[tuple[int, int]]:
    """All subcycles by the literal definition, as (start, length) pairs.

    A subcycle is a run ``v[i] .. v[j]`` with ``v[i] = v[j]`` and
    ``v[i] .. v[j-1]`` pairwise distinct.
    """
    body = list(seq[:-1]) if closed and len(seq) > 1 and seq[0] == seq[-1] else list(seq)
    L = len(body)
    out = []
    for i in range(L):
        seen = {body[i]}
        limit = L if closed else L - i - 1
        for j in range(1, limit + 1):
            v = body[(i + j) % L] if closed else body[i + j]
            if v == body[i]:
                out.append((i, j))
                break
            if v in seen:
                break
            seen.add(v)
    return out


def verify_trail(g: PlaneGraph, vertices: Sequence, k: int = 4, closed: bool | None = None,
                 eulerian: bool = True) -> Verdict:
    """Check a trail given in labels against ``g``."""
    if closed is None:
        closed = len(vertices) > 1 and vertices[0] == vertices[-1]
    if len(vertices) < 2:
        return Verdict(g.m == 0 or not eulerian, "trail has no edges")
    if closed and vertices[0] != vertices[-1]:
        return Verdict(False, "trail is not closed")
    used: set[frozenset] = set()
    for a, b in zip(vertices, vertices[1:]):
        if not (g.has_label(a) and g.has_label(b)) or not g.has_edge(g.index(a), g.index(b)):
            return Verdict(False, f"{a}{b} is not an edge")
        e = frozenset((a, b))
        if e in used:
            return Verdict(False, f"edge {a}{b} repeated")
        used.add(e)
    if eulerian and len(used) != g.m:
        return Verdict(False, f"covers {len(used)} of {g.m} edges")
    bad = window_violation(vertices, closed, k)
    if bad is not None:
        i, j = bad
        return Verdict(False, f"closed subwalk of length {j - i} at position {i}")
    return Verdict(True)


def verify_circuit(g: PlaneGraph, circuit: Trail | Sequence, k: int = 4) -> Verdict:
    seq = circuit.vertices if isinstance(circuit, Trail) else tuple(circuit)
    if len(seq) < 2 or seq[0] != seq[-1]:
        return Verdict(False, "not a closed trail")
    return verify_trail(g, seq, k, closed=True)


# ---------------------------------------------------------------------------
# search


class _EdgeGraph:
    def __init__(self, labels: Sequence, edges: Iterable[tuple[int, int]]):
        self.labels = list(labels)
        self.edges = list(edges)
        self.inc: list[list[tuple[int, int]]] = [[] for _ in self.labels]
        for i, (u, v) in enumerate(self.edges):
            self.inc[u].append((v, i))
            self.inc[v].append((u, i))

    @classmethod
    def of(cls, g: PlaneGraph) -> "_EdgeGraph":
        eg = cls(g.labels, [])
        # keep rotation order for determinism
        seen = {}
        for u in range(g.n):
            for v in g.rot[u]:
                key = (min(u, v), max(u, v))
                if key not in seen:
                    seen[key] = len(eg.edges)
                    eg.edges.append(key)
                eg.inc[u].append((v, seen[key]))
        return eg

    def connected_rest(self, cur: int, used: int) -> bool:
        """Unused edges form one component that contains ``cur``."""
        m = len(self.edges)
        full = (1 << m) - 1
        rest = full & ~used
        if rest == 0:
            return True
        seen = {cur}
        stack = [cur]
        covered = 0
        while stack:
            u = stack.pop()
            for w, e in self.inc[u]:
                if not (used >> e) & 1:
                    covered |= 1 << e
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
        return covered == rest


class _Search:
    def __init__(self, eg: _EdgeGraph, cfg: SearchConfig, memo: bool, prune_window: bool):
        self.eg = eg
        self.cfg = cfg
        self.k = cfg.k
        self.m = len(eg.edges)
        self.full = (1 << self.m) - 1
        self.nodes = 0
        self.memo: set | None = set() if memo else None
        self.prune_window = prune_window

    def tick(self):
        self.nodes += 1
        if self.cfg.cap is not None and self.nodes > self.cfg.cap:
            raise BudgetExhausted(f"node budget {self.cfg.cap} exhausted")

    def run(self, path: list[int], used: int, visit: Callable[[list[int]], bool]) -> bool:
        """Depth-first search; ``visit`` returns True to stop."""
        self.tick()
        k = self.k
        cur = path[-1]
        if used == self.full:
            if self.cfg.closed and cur != path[0]:
                return False
            if self.prune_window and self.cfg.closed and window_violation(path, True, k) is not None:
                return False
            return visit(path)
        key = None
        if self.memo is not None:
            head = tuple(path[:k]) if self.cfg.closed else ()
            key = (used, tuple(path[-k:]) if k else cur, head)
            if key in self.memo:
                return False
        for w, e in self.eg.inc[cur]:
            if (used >> e) & 1:
                continue
            if self.prune_window and k and w in path[-k:]:
                continue
            nu = used | (1 << e)
            if not self.eg.connected_rest(w, nu):
                continue
            path.append(w)
            if self.run(path, nu, visit):
                return True
            path.pop()
        if key is not None:
            self.memo.add(key)
        return False


def _start_points(eg: _EdgeGraph, cfg: SearchConfig) -> list[tuple[int, int | None]]:
    deg = [len(x) for x in eg.inc]
    odd = [v for v in range(len(deg)) if deg[v] % 2]
    if cfg.closed:
        if odd:
            return []
        if cfg.start is not None:
            s = eg.labels.index(cfg.start)
            if not eg.inc[s]:
                return []
        else:
            s = min((v for v in range(len(deg)) if deg[v]), default=None)
            if s is None:
                return []
        # pin the first edge to the least-labelled neighbour
        w = min(eg.inc[s], key=lambda t: t[0])
        return [(s, w[1])]
    if cfg.start is not None:
        s = eg.labels.index(cfg.start)
        if len(odd) == 2 and s in odd:
            return [(s, None)]
        return []
    if len(odd) != 2:
        return []
    return [(odd[0], None)]


def _drive(eg: _EdgeGraph, cfg: SearchConfig, visit, memo: bool, prune_window: bool) -> int:
    if len(eg.edges) == 0:
        return 0
    srch = _Search(eg, cfg, memo, prune_window)
    for s, first_edge in _start_points(eg, cfg):
        if not eg.connected_rest(s, 0):
            return srch.nodes
        if first_edge is None:
            srch.run([s], 0, visit)
        else:
            u, v = eg.edges[first_edge]
            w = v if u == s else u
            if eg.connected_rest(w, 1 << first_edge):
                srch.run([s, w], 1 << first_edge, visit)
    return srch.nodes


def search(g: PlaneGraph, cfg: SearchConfig = SearchConfig()) -> Trail | None:
    """A k-locally self-avoiding Eulerian trail or circuit, or None.

    ``None`` is a definitive answer; running out of budget raises
    :class:`BudgetExhausted` instead.
    """
    eg = _EdgeGraph.of(g)
    found: list[list[int]] = []

    def visit(path):
        found.append(list(path))
        return True

    _drive(eg, cfg, visit, memo=True, prune_window=True)
    if not found:
        return None
    return Trail(tuple(g.labels[v] for v in found[0]), cfg.closed)


def enumerate_trails(g: PlaneGraph, cfg: SearchConfig, visitor: Callable[[Trail], bool | None],
                     prune: bool = True) -> int:
    """Visit every Eulerian trail (closed ones up to rotation and reversal).

    With ``prune`` only k-locally self-avoiding trails are produced; without
    it every Eulerian trail is visited.  The visitor may return True to stop.
    Returns the number of trails visited.
    """
    eg = _EdgeGraph.of(g)
    count = 0

    def visit(path):
        nonlocal count
        count += 1
        return bool(visitor(Trail(tuple(g.labels[v] for v in path), cfg.closed)))

    _drive(eg, cfg, visit, memo=False, prune_window=prune)
    return count


def good_circuits(g: PlaneGraph, limit: int, k: int = 4, cap: int | None = None) -> list[Trail]:
    """Up to ``limit`` distinct good circuits in search order."""
    out: list[Trail] = []

    def take(t):
        out.append(t)
        return len(out) >= limit

    enumerate_trails(g, SearchConfig(k=k, closed=True, cap=cap), take)
    return out


def search_edges(labels: Sequence, edges: Sequence[tuple], cfg: SearchConfig) -> Trail | None:
    """Search on an abstract edge list given in labels (no embedding needed)."""
    idx = {lab: i for i, lab in enumerate(labels)}
    eg = _EdgeGraph(labels, [(idx[a], idx[b]) for a, b in edges])
    found: list[list[int]] = []

    def visit(path):
        found.append(list(path))
        return True

    _drive(eg, cfg, visit, memo=True, prune_window=True)
    if not found:
        return None
    return Trail(tuple(labels[v] for v in found[0]), cfg.closed)
