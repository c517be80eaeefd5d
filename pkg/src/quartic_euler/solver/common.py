"""Shared types for the constructive solver."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Hashable, Sequence

from ..oracle import verify_circuit, verify_trail
from ..plane_graph import GraphError, PlaneGraph, Trail

Label = Hashable
log = logging.getLogger("quartic_euler.solver")


class SolverError(GraphError):
    """Input outside the class a solver entry point accepts."""


class IsOctahedron(SolverError):
    pass


class NotThreeEdgeConnected(SolverError):
    pass


class NotTwoConnected(SolverError):
    pass


class PreconditionViolated(SolverError):
    pass


class InternalCaseExhaustion(RuntimeError):
    """No case of a construction applied.  This is a bug, not a property of the input."""

    def __init__(self, message: str, graph: PlaneGraph | None = None, circuit=None, op=None):
        super().__init__(message)
        self.graph = graph
        self.circuit = circuit
        self.op = op

    def __str__(self) -> str:
        parts = [self.args[0]]
        if self.op is not None:
            parts.append(f"op={self.op}")
        if self.circuit is not None:
            parts.append("circuit=" + " ".join(map(str, self.circuit)))
        if self.graph is not None:
            parts.append(f"n={self.graph.n}")
        return "; ".join(parts)


# ---------------------------------------------------------------------------
# outcomes


@dataclass(frozen=True)
class GoodCircuit:
    trail: Trail

    @property
    def closed(self) -> bool:
        return True


@dataclass(frozen=True)
class ObstructedByF6:
    vertex_map: dict


@dataclass(frozen=True)
class Disconnected:
    components: int


SolveOutcome = GoodCircuit | ObstructedByF6 | Disconnected


# ---------------------------------------------------------------------------
# transcript


@dataclass
class Transcript:
    """Step log of one solve; cheap enough to keep on by default."""

    lines: list[str] = field(default_factory=list)
    depth: int = 0
    counts: dict = field(default_factory=dict)

    def note(self, msg: str) -> None:
        self.lines.append("  " * self.depth + msg)
        log.debug(msg)

    def bump(self, key: str) -> None:
        self.counts[key] = self.counts.get(key, 0) + 1

    def text(self) -> str:
        return "\n".join(self.lines)


class _Nested:
    def __init__(self, tr: Transcript | None):
        self.tr = tr

    def __enter__(self):
        if self.tr is not None:
            self.tr.depth += 1

    def __exit__(self, *exc):
        if self.tr is not None:
            self.tr.depth -= 1


def nested(tr: Transcript | None) -> _Nested:
    return _Nested(tr)


def note(tr: Transcript | None, msg: str) -> None:
    if tr is not None:
        tr.note(msg)


# ---------------------------------------------------------------------------
# sequence helpers


def body(circuit: Sequence) -> list:
    """Closed vertex sequence without the repeated final vertex."""
    seq = list(circuit)
    if len(seq) > 1 and seq[0] == seq[-1]:
        seq.pop()
    return seq


def close(seq: Sequence) -> tuple:
    seq = tuple(seq)
    return seq + seq[:1]


def rotate_to(circuit: Sequence, v) -> tuple:
    b = body(circuit)
    i = b.index(v)
    return close(b[i:] + b[:i])


def rotate_to_edge(circuit: Sequence, p, q) -> tuple:
    """Rotate a circuit so that it starts with the step ``p -> q``.

    The circuit is reversed if it only contains ``q -> p``.
    """
    b = body(circuit)
    L = len(b)
    for seq in (b, b[::-1]):
        for i in range(L):
            if seq[i] == p and seq[(i + 1) % L] == q:
                return close(seq[i:] + seq[:i])
    raise ValueError(f"{p}{q} not on circuit")


def is_good_circuit(g: PlaneGraph, seq: Sequence) -> bool:
    return bool(verify_circuit(g, seq, 4))


def is_good_trail(g: PlaneGraph, seq: Sequence, eulerian: bool = False) -> bool:
    return bool(verify_trail(g, seq, 4, closed=False, eulerian=eulerian))


def require_good(g: PlaneGraph, seq: Sequence, what: str, tr: Transcript | None = None) -> Trail:
    v = verify_circuit(g, seq, 4)
    if not v:
        raise InternalCaseExhaustion(f"{what}: produced circuit fails verification ({v.reason})", g, seq)
    return Trail(tuple(seq), True)
