import random

import pytest

from quartic_euler.plane_graph import from_rotation
from quartic_euler.solver import InternalCaseExhaustion, PreconditionViolated, rearrange_trails
from quartic_euler.solver.rearrange import check_pair
from trail_pairs import Instance, random_instance


def check_output(inst: Instance, pair) -> None:
    a, b = pair.first, pair.second
    assert check_pair(inst.graph, a, b) is None
    X, Y = set(inst.xs), set(inst.ys)
    if pair.shape == "XX":
        assert {a[0], a[-1]} == X and {b[0], b[-1]} == Y
        assert len(a) - 1 >= 5 and len(b) - 1 >= 5
    else:
        assert pair.shape == "XY"
        assert a[0] in X and a[-1] in Y and b[0] in X and b[-1] in Y
        assert len(a) - 1 >= 3 and len(b) - 1 >= 3


def test_random_inputs():
    rng = random.Random(11)
    shapes = set()
    for _ in range(500):
        inst = random_instance(rng)
        pair = rearrange_trails(inst.graph, inst.t1, inst.t2, inst.xs, inst.ys)
        check_output(inst, pair)
        shapes.add(pair.shape)
    assert shapes == {"XX", "XY"}


def _find(rng, pred):
    for _ in range(20000):
        inst = random_instance(rng)
        if pred(inst):
            return inst
    pytest.fail("no instance of the wanted form")


def _xy(inst, t):
    return {t[0], t[-1]} not in ({*inst.xs}, {*inst.ys})


def test_long_xy_pair_unchanged():
    inst = _find(random.Random(2), lambda i: _xy(i, i.t1) and min(len(i.t1), len(i.t2)) >= 4)
    pair = rearrange_trails(inst.graph, inst.t1, inst.t2, inst.xs, inst.ys)
    assert pair.shape == "XY"
    got = {tuple(pair.first), tuple(pair.second)}
    want = {tuple(t if t[0] in inst.xs else t[::-1]) for t in (inst.t1, inst.t2)}
    assert got == want


def test_length_two_trail_is_lengthened():
    # T1 = x1 z y1; the long trail is split at z
    def short_xy(i):
        return _xy(i, i.t1) and (len(i.t1) == 3 or len(i.t2) == 3) and max(len(i.t1), len(i.t2)) > 3

    inst = _find(random.Random(4), short_xy)
    short, long_ = (inst.t1, inst.t2) if len(inst.t1) == 3 else (inst.t2, inst.t1)
    if short[0] not in inst.xs:
        short = short[::-1]
    x1, z, y1 = short
    pair = rearrange_trails(inst.graph, inst.t1, inst.t2, inst.xs, inst.ys)
    check_output(inst, pair)
    firsts = {t[:2] for t in pair.trails}
    lasts = {t[-2:] for t in pair.trails}
    assert (x1, z) in firsts and (z, y1) in lasts


def test_preconditions():
    inst = random_instance(random.Random(1))
    g = inst.graph
    with pytest.raises(PreconditionViolated):
        rearrange_trails(g, inst.t1, inst.t2, inst.xs, (inst.ys[0], inst.ys[0]))
    with pytest.raises(PreconditionViolated):
        rearrange_trails(g, inst.t1, inst.t1, inst.xs, inst.ys)
    with pytest.raises(PreconditionViolated):
        rearrange_trails(g, inst.t1[:-1], inst.t2, inst.xs, inst.ys)


def test_non_pendant_rejected():
    g = from_rotation({"a": ["b", "c"], "b": ["a", "c"], "c": ["a", "b"]})
    with pytest.raises(PreconditionViolated):
        rearrange_trails(g, ["a", "b"], ["b", "c", "a"], ["a", "b"], ["c", "d"])


def test_exhaustion_is_not_a_precondition_error():
    assert not issubclass(InternalCaseExhaustion, PreconditionViolated)
