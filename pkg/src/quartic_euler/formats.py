"""Reading and writing plane graphs.

Three formats are supported:

* ``.rotsys`` text: one line per vertex, ``v: n1 n2 ...`` with neighbours in
  clockwise order; ``#`` starts a comment.
* graph6 (abstract graphs); an embedding is computed with networkx.
* planar_code, the binary format used by plantri.  The byte-level layout is
  the header ``>>planar_code<<`` followed, per graph, by one byte ``n`` and
  then for each vertex its 1-based neighbours in clockwise order terminated
  by ``0``.  Only the single-byte variant (``n <= 255``) is handled.

For example the triangle with rotations ``1: 2 3``, ``2: 3 1``, ``3: 1 2``
is encoded as ``>>planar_code<<`` ``03 02 03 00 03 01 00 01 02 00``.
"""

from __future__ import annotations

from typing import Iterable, Iterator

import networkx as nx

from .plane_graph import GraphError, NotPlanar, PlaneGraph, build

HEADER = b">>planar_code<<"


def _token(s: str):
    return int(s) if s.lstrip("-").isdigit() else s


def parse_rotsys(text: str) -> PlaneGraph:
    rot: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise GraphError(f"line {lineno}: expected 'vertex: neighbours'")
        head, tail = line.split(":", 1)
        v = _token(head.strip())
        if v in rot:
            raise GraphError(f"line {lineno}: vertex {v!r} listed twice")
        rot[v] = [_token(t) for t in tail.split()]
    return build(rot)


def format_rotsys(g: PlaneGraph) -> str:
    lines = []
    for v in range(g.n):
        nb = " ".join(str(g.labels[w]) for w in g.rot[v])
        lines.append(f"{g.labels[v]}: {nb}".rstrip())
    return "\n".join(lines) + "\n"


def embed_networkx(graph: nx.Graph) -> PlaneGraph:
    """Plane graph from an abstract networkx graph via a planarity test."""
    ok, emb = nx.check_planarity(graph)
    if not ok:
        raise NotPlanar("graph is not planar")
    nodes = list(graph.nodes())
    rot = {v: list(emb.neighbors_cw_order(v)) if graph.degree(v) else [] for v in nodes}
    return build(rot)


def parse_graph6(line: str) -> PlaneGraph:
    g = nx.from_graph6_bytes(line.strip().encode())
    return embed_networkx(g)


def format_graph6(g: PlaneGraph) -> str:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return nx.to_graph6_bytes(h, header=False).decode().strip()


def encode_planar_code(graphs: Iterable[PlaneGraph], header: bool = True) -> bytes:
    out = bytearray(HEADER if header else b"")
    for g in graphs:
        if g.n > 255:
            raise GraphError("planar_code single-byte variant needs n <= 255")
        out.append(g.n)
        for v in range(g.n):
            out.extend(w + 1 for w in g.rot[v])
            out.append(0)
    return bytes(out)


def decode_planar_code(data: bytes) -> Iterator[PlaneGraph]:
    i = len(HEADER) if data.startswith(HEADER) else 0
    while i < len(data):
        n = data[i]
        i += 1
        rot = []
        for _ in range(n):
            r = []
            while data[i] != 0:
                r.append(data[i] - 1)
                i += 1
            i += 1
            rot.append(r)
        yield build(rot)


def read_graphs(data: bytes, fmt: str | None = None) -> list[PlaneGraph]:
    """Read one or more graphs; ``fmt`` is sniffed when not given."""
    if fmt is None:
        if data.startswith(HEADER):
            fmt = "planar_code"
        elif b":" in data:
            fmt = "rotsys"
        else:
            fmt = "graph6"
    if fmt == "planar_code":
        return list(decode_planar_code(data))
    text = data.decode()
    if fmt == "rotsys":
        return [parse_rotsys(text)]
    if fmt == "graph6":
        return [parse_graph6(s) for s in text.splitlines() if s.strip() and not s.startswith(">>")]
    raise GraphError(f"unknown format {fmt!r}")
