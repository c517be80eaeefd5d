"""Constructive good-circuit solver, one entry point per connectivity layer."""

from .common import (
    Disconnected,
    GoodCircuit,
    InternalCaseExhaustion,
    IsOctahedron,
    NotThreeEdgeConnected,
    NotTwoConnected,
    ObstructedByF6,
    PreconditionViolated,
    SolveOutcome,
    SolverError,
    Transcript,
)
from .layers import (
    base_circuit,
    good_circuit,
    good_circuit_2connected,
    good_circuit_3connected,
    good_circuit_3edgeconnected,
    solve_side,
)
from .lifts import induced_circuit, lift_3cycle_slide, lift_4cycle_addition, lift_special_pegging
from .pegging import lift_pegging
from .rearrange import TrailPair, rearrange_trails

__all__ = [
    "Disconnected",
    "GoodCircuit",
    "InternalCaseExhaustion",
    "IsOctahedron",
    "NotThreeEdgeConnected",
    "NotTwoConnected",
    "ObstructedByF6",
    "PreconditionViolated",
    "SolveOutcome",
    "SolverError",
    "Transcript",
    "TrailPair",
    "base_circuit",
    "good_circuit",
    "good_circuit_2connected",
    "good_circuit_3connected",
    "good_circuit_3edgeconnected",
    "induced_circuit",
    "lift_3cycle_slide",
    "lift_4cycle_addition",
    "lift_pegging",
    "lift_special_pegging",
    "rearrange_trails",
    "solve_side",
]
