"""Oracle-driven sweep over expansion operations and their lifts."""

from __future__ import annotations

from dataclasses import dataclass, field

from quartic_euler.generation import FourCycleAddition, Pegging, ThreeCycleSlide, apply, expansions, generate
from quartic_euler.oracle import good_circuits, verify_circuit
from quartic_euler.solver import (
    InternalCaseExhaustion,
    good_circuit_3connected,
    lift_3cycle_slide,
    lift_4cycle_addition,
    lift_pegging,
)


@dataclass
class SweepResult:
    lifts: int = 0
    pairs: int = 0
    by_op: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    exhaustion: list = field(default_factory=list)


def lift(circuit, h, g, op):
    if isinstance(op, Pegging):
        return lift_pegging(circuit, h, g, op, resolver=good_circuit_3connected)
    if isinstance(op, FourCycleAddition):
        return lift_4cycle_addition(circuit, h, g, op)
    if isinstance(op, ThreeCycleSlide):
        return lift_3cycle_slide(circuit, h, g, op)
    raise TypeError(op)


def lift_sweep(n_max: int = 10, cap: int = 50) -> SweepResult:
    res = SweepResult()
    corpus = generate(n_max)
    for n in sorted(corpus):
        for h in corpus[n]:
            circuits = [t.vertices for t in good_circuits(h, cap)]
            if not circuits:
                continue
            for op in expansions(h):
                g = apply(h, op)
                res.pairs += 1
                kind = type(op).__name__
                for c in circuits:
                    res.lifts += 1
                    res.by_op[kind] = res.by_op.get(kind, 0) + 1
                    try:
                        out = lift(c, h, g, op)
                    except InternalCaseExhaustion as exc:
                        res.exhaustion.append((h, op, c, str(exc)))
                        continue
                    if not verify_circuit(g, out):
                        res.failures.append((h, op, c, out))
    return res
