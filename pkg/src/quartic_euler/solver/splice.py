"""Re-threading trails through anchor vertices.

Several constructions end with a handful of trails that must be joined into
one good trail or circuit.  When the fixed formula for a case does not
verify, the pieces are cut at anchor vertices and re-joined by a small
bounded search over orders and orientations.
"""

from __future__ import annotations

from typing import Sequence

from ..oracle import window_violation


class _Budget(Exception):
    pass


def cut_at(pieces: Sequence[Sequence], anchors: set) -> list[tuple]:
    """Split every piece at interior occurrences of anchor vertices."""
    out = []
    for p in pieces:
        p = list(p)
        last = 0
        for i in range(1, len(p) - 1):
            if p[i] in anchors:
                out.append(tuple(p[last:i + 1]))
                last = i
        out.append(tuple(p[last:]))
    return [q for q in out if len(q) > 1]


def splice(pieces: Sequence[Sequence], start=None, end=None, closed: bool = False,
           k: int = 4, budget: int = 50000) -> list | None:
    """Join edge-disjoint trails into one k-locally self-avoiding trail.

    For a closed result the first piece is kept first and forward (a closed
    circuit can always be rotated and reversed to achieve that).
    """
    segs = [tuple(p) for p in pieces if len(p) > 1]
    m = len(segs)
    if m == 0:
        return None
    used = [False] * m
    nodes = 0
    path: list = []

    def ok_from(mark: int) -> bool:
        for i in range(max(mark, 1), len(path)):
            for j in range(1, k + 1):
                if i - j < 0:
                    break
                if path[i] == path[i - j]:
                    return False
        return True

    def rec(count: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise _Budget
        if count == m:
            if closed:
                return path[-1] == path[0] and window_violation(path, True, k) is None
            return end is None or path[-1] == end
        cur = path[-1]
        for s in range(m):
            if used[s]:
                continue
            seen_piece = set()
            for piece in (segs[s], segs[s][::-1]):
                if piece[0] != cur or piece in seen_piece:
                    continue
                seen_piece.add(piece)
                mark = len(path)
                path.extend(piece[1:])
                if ok_from(mark):
                    used[s] = True
                    if rec(count + 1):
                        return True
                    used[s] = False
                del path[mark:]
        return False

    firsts: list[tuple[int, tuple]] = []
    if closed:
        firsts = [(0, segs[0])]
    else:
        for s in range(m):
            for piece in (segs[s], segs[s][::-1]):
                if start is None or piece[0] == start:
                    firsts.append((s, piece))
    try:
        for s, piece in firsts:
            path[:] = list(piece)
            if not ok_from(1):
                continue
            used[s] = True
            if rec(1):
                return list(path)
            used[s] = False
    except _Budget:
        return None
    return None
