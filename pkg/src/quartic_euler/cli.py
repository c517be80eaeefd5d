"""Command-line interface.

Exit codes: 0 success, 1 negative result (no circuit, failed check,
length mismatch), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import random
import sys
from typing import Sequence

from . import decomposer, formats, generation, oracle
from .obstructions import F6_EDGES, G7_TRAIL, MEMBERS
from .plane_graph import CutType, GraphError, PlaneGraph
from .solver import Disconnected, GoodCircuit, ObstructedByF6, Transcript, good_circuit

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    pass


def _read(path: str, fmt: str | None) -> list[PlaneGraph]:
    try:
        if path == "-":
            data = sys.stdin.buffer.read()
        else:
            with open(path, "rb") as fh:
                data = fh.read()
        graphs = formats.read_graphs(data, fmt)
    except (OSError, GraphError, ValueError, IndexError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    if not graphs:
        raise InputError(f"{path}: no graphs")
    return graphs


def _label(g: PlaneGraph, token: str):
    for lab in g.labels:
        if str(lab) == token:
            return lab
    raise InputError(f"no vertex named {token!r}")


def _write_graphs(graphs: Sequence[PlaneGraph], fmt: str) -> None:
    if fmt == "planar_code":
        sys.stdout.buffer.write(formats.encode_planar_code(graphs))
        sys.stdout.buffer.flush()
    elif fmt == "graph6":
        for g in graphs:
            print(formats.format_graph6(g))
    else:
        print("\n".join(formats.format_rotsys(g) for g in graphs), end="")


# ---------------------------------------------------------------------------
# subcommands


def cmd_generate(args) -> int:
    if args.vertices < 6:
        print("error: --vertices must be at least 6", file=sys.stderr)
        return EXIT_USAGE
    graphs = generation.generate(args.vertices, jobs=args.jobs).get(args.vertices, [])
    if args.count_only:
        print(len(graphs))
    else:
        _write_graphs(graphs, args.format or "planar_code")
    return EXIT_OK


def cmd_solve(args) -> int:
    status = EXIT_OK
    for g in _read(args.file, args.format):
        if args.k != 4:
            t = oracle.search(g, oracle.SearchConfig(k=args.k, closed=True))
            if t is None:
                print("none")
                status = EXIT_NEGATIVE
            else:
                print(" ".join(map(str, t.vertices)))
            continue
        tr = Transcript() if args.trace else None
        out = good_circuit(g, tr)
        if tr is not None:
            print(tr.text(), file=sys.stderr)
        if isinstance(out, GoodCircuit):
            print(" ".join(map(str, out.trail.vertices)))
        elif isinstance(out, ObstructedByF6):
            pairs = " ".join(f"{k}={out.vertex_map[k]}" for k in "xyabcd")
            print(f"F6 {pairs}")
            status = EXIT_NEGATIVE
        elif isinstance(out, Disconnected):
            print(f"disconnected components={out.components}")
            status = EXIT_NEGATIVE
    return status


def _parse_lengths(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError as exc:
        raise InputError(f"bad --lengths: {text}") from exc


def cmd_decompose(args) -> int:
    g = _read(args.file, args.format)[0]
    lengths = _parse_lengths(args.lengths)
    start = _label(g, args.start) if args.start is not None else g.labels[0]
    try:
        d = decomposer.p_decomposition(g, lengths, start)
    except decomposer.LengthMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except decomposer.DisconnectedGraph as exc:
        print(f"disconnected: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except decomposer.BadLengths as exc:
        raise InputError(str(exc)) from exc
    print(d)
    return EXIT_OK


def _tokens(path: str) -> list[list[str]]:
    try:
        with open(path) as fh:
            return [line.split() for line in fh if line.strip()]
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def cmd_verify(args) -> int:
    graphs = _read(args.file, args.format)
    lines = _tokens(args.answer)
    if args.what == "circuit":
        if len(lines) != len(graphs):
            print(f"invalid: {len(lines)} answers for {len(graphs)} graphs")
            return EXIT_NEGATIVE
        status = EXIT_OK
        for g, toks in zip(graphs, lines):
            try:
                seq = [_label(g, t) for t in toks]
            except InputError as exc:
                print(f"invalid: {exc}")
                status = EXIT_NEGATIVE
                continue
            v = oracle.verify_circuit(g, seq, args.k)
            print("ok" if v else f"invalid: {v.reason}")
            if not v:
                status = EXIT_NEGATIVE
        return status
    g = graphs[0]
    try:
        paths = tuple(tuple(_label(g, t) for t in toks) for toks in lines)
    except InputError as exc:
        print(f"invalid: {exc}")
        return EXIT_NEGATIVE
    if not paths:
        print("invalid: no paths")
        return EXIT_NEGATIVE
    lengths = _parse_lengths(args.lengths) if args.lengths else None
    start = _label(g, args.start) if args.start is not None else paths[0][0]
    v = decomposer.verify_decomposition(g, decomposer.PathDecomposition(paths, start), lengths, start)
    print("ok" if v else f"invalid: {v.reason}")
    return EXIT_OK if v else EXIT_NEGATIVE


def cmd_oracle(args) -> int:
    g = _read(args.file, args.format)[0]
    cfg = oracle.SearchConfig(k=args.k, closed=not args.open, cap=args.budget)
    try:
        t = oracle.search(g, cfg)
    except oracle.BudgetExhausted:
        print("budget")
        return EXIT_NEGATIVE
    if t is None:
        print("none")
        return EXIT_NEGATIVE
    print(" ".join(map(str, t.vertices)))
    return EXIT_OK


# ---------------------------------------------------------------------------
# gallery


def _dot(name: str, edges, highlight=()) -> str:
    lines = [f'graph "{name}" {{', "  node [shape=circle];"]
    marked = {frozenset(e) for e in highlight}
    for a, b in edges:
        style = ' [color=red, penwidth=2]' if frozenset((a, b)) in marked else ""
        lines.append(f"  {a} -- {b}{style};")
    lines.append("}")
    return "\n".join(lines)


def _trail_edges(trail: str) -> list[tuple[str, str]]:
    return [(trail[i], trail[i + 1]) for i in range(len(trail) - 1)]


# half-edges sent into side A by each cut vertex; the rest go to side B
_CUT_SPLITS = {
    CutType.A: {"x": 2, "y": 2},
    CutType.B: {"x": 1, "y": 1},
    CutType.C: {"x": 1, "y": 3},
    CutType.D: {"x": 1, "y": 2},
    CutType.E: {"x": 2},
}


def _cut_schematic(kind: CutType) -> str:
    lines = [f'graph "cut-{kind.value}" {{', "  A [shape=box]; B [shape=box];"]
    adjacent = kind is CutType.D
    for v, into_a in _CUT_SPLITS[kind].items():
        free = 4 - (1 if adjacent else 0)
        lines += [f"  {v} -- A;"] * into_a + [f"  {v} -- B;"] * (free - into_a)
    if adjacent:
        lines.append("  x -- y;")
    lines.append("}")
    return "\n".join(lines)


def cmd_gallery(args) -> int:
    out = []
    want = args.figure
    if want in ("f6", "all"):
        out.append(_dot("F6", [(e[0], e[1]) for e in F6_EDGES]))
    if want in ("g7", "all"):
        out.append(_dot("G7", _trail_edges(G7_TRAIL)))
    if want in ("c", "all"):
        for mem in MEMBERS:
            edges = sorted({tuple(sorted((a, b))) for a, ns in mem.adj.items() for b in ns})
            t1 = mem.trails[0][0]
            out.append(_dot(mem.name, edges, _trail_edges(t1)))
    if want in ("cuts", "all"):
        out.extend(_cut_schematic(k) for k in CutType)
    print("\n\n".join(out))
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["rotsys", "graph6", "planar_code"], default=None)
    common.add_argument("--trace", action="store_true", help="print the construction steps to stderr")
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="quartic-euler", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("generate", parents=[common], help="3-connected quartic plane graphs on N vertices")
    s.add_argument("--vertices", type=int, required=True)
    s.add_argument("--count-only", action="store_true")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("solve", parents=[common], help="a good Eulerian circuit or the obstruction")
    s.add_argument("file")
    s.add_argument("--k", type=int, default=4)
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("decompose", parents=[common], help="paths of prescribed lengths")
    s.add_argument("file")
    s.add_argument("--lengths", required=True)
    s.add_argument("--start")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("verify", parents=[common], help="check a circuit or a decomposition")
    s.add_argument("what", choices=["circuit", "decomposition"])
    s.add_argument("file")
    s.add_argument("--answer", required=True)
    s.add_argument("--k", type=int, default=4)
    s.add_argument("--lengths")
    s.add_argument("--start")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("oracle", parents=[common], help="exhaustive search")
    s.add_argument("file")
    s.add_argument("--k", type=int, default=4)
    s.add_argument("--open", action="store_true", help="look for an open Eulerian trail")
    s.add_argument("--budget", type=int, default=None)
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("gallery", parents=[common], help="dot drawings of the small graphs")
    s.add_argument("--figure", choices=["f6", "g7", "c", "cuts", "all"], default="all")
    s.set_defaults(func=cmd_gallery)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    random.seed(args.seed)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
