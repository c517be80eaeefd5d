"""Lifting a good circuit through a pegging.

The induced circuit (``ab -> aub``, ``cd -> cud``) has at most one short
subcycle, and it passes through ``u``.  Its shape is one of

* case 1: a triangle ``ubcu`` (or ``uadu``),
* case 2: ``ubvcu``,
* case 3: ``uavdu``,
* case 4: ``ubvdu`` (or ``uavcu``).

Each case has a table of circuit forms and reroutings written in segment
notation: upper-case tokens are segments of the circuit between anchors,
lower-case tokens are single vertices, and ``~`` reverses a segment.  A
rerouting is accepted only after it verifies.  Behind the tables sit a
bounded recombination of the same segments and, last, a restructure through
a 3-cycle unslide of the expanded graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from ..generation import Pegging, _in_class, apply, unslide
from ..plane_graph import PlaneGraph, Trail
from .common import InternalCaseExhaustion, Transcript, body, close, is_good_circuit, note
from .lifts import induced_circuit, lift_3cycle_slide
from .splice import cut_at, splice

ROLES = ("u", "a", "b", "c", "d")


@dataclass(frozen=True)
class Template:
    case: str
    name: str
    form: tuple
    candidates: tuple
    redispatch: bool = False


def _t(case: str, name: str, form: str, cands: Sequence[str], redispatch: bool = False) -> Template:
    return Template(case, name, tuple(form.split()), tuple(tuple(c.split()) for c in cands), redispatch)


def _with_prefixes(case, name, prefixes, rest, cands, redispatch=False):
    return [_t(case, name, f"{p} {rest}", cands, redispatch) for p in prefixes]


_P1 = ("u b c u", "u c b u")
_P2 = ("u b v c u", "u c v b u")

TEMPLATES: list[Template] = [
    *_with_prefixes("1", "1a", _P1, "X b Y c Z u", [
        "u c b X~ u b Y c Z u", "u c b Y c Z u b X~ u",
        "u b c Z u c Y~ b X~ u", "u b c Y~ b X~ u c Z u"]),
    *_with_prefixes("1", "1biii", _P1, "x1 x2 X1 b x2 y2 c Z1 x1 Z2 u",
                    ["u b x2 y2 c u x1 x2 X1 b c Z1 x1 Z2 u"]),
    *_with_prefixes("1", "1biii", _P1, "x1 x2 X1 b x2 y2 c Z u",
                    ["u c y2 x2 x1 u Z~ c b x2 X1 b u"]),
    *_with_prefixes("1", "1c", _P1, "x1 x2 b y c Z1 x2 Z2 u",
                    ["u b y c Z1 x2 x1 u c b x2 Z2 u"]),
    *_with_prefixes("1", "1c", _P1, "x1 x2 b y c z1 z2 Z3 x2 Z2 u",
                    ["u b c y Z3 x2 x1 u c z1 z2 y b x2 Z2 u"]),
    *_with_prefixes("1", "1c", _P1, "x1 x2 b y c Z1 x1 Z2 u",
                    ["u b y c Z1 x1 x2 b c u x1 Z2 u"]),
    *_with_prefixes("1", "1c", _P1, "x1 x2 b y c Z1 y Z2 u",
                    ["u x1 x2 b c y Z2 u b y Z1~ c u"]),
    *_with_prefixes("1", "1c", _P1, "x1 x2 b y c z1 y x2 Z3 z1 Z4 u",
                    ["u x1 x2 b c z1 Z3~ x2 y b u Z4~ z1 y c u",
                     "u x1 x2 y z1 u c b x2 Z3 z1 c y b u"]),
    *_with_prefixes("1", "1c", _P1, "x1 x2 b y1 y2 c Z1 y1 Z2 u",
                    ["u Z2~ y1 y2 c u x1 x2 b y1 Z1~ c b u"]),
    *_with_prefixes("1", "1c", _P1, "x1 x2 b y1 y2 c Z u",
                    ["u x1 x2 b c Z u b y1 y2 c u"]),
    *_with_prefixes("1", "1c", _P1, "x1 x2 b y1 y2 c z1 x2 Z1 z1 Z2 u",
                    ["u b y1 y2 c z1 Z2 u c b x2 Z1 z1 x2 x1 u"]),
    *_with_prefixes("1", "1c", _P1, "x1 x2 b y1 y2 c Z1 zm1 Z2 y1 zm1 u",
                    ["u c y2 y1 zm1 u x1 x2 b c Z1 zm1 Z2 y1 b u"]),
    *_with_prefixes("2", "2a", _P2, "X b c Y v Z u", ["u b c Y v Z u c v b X~ u"]),
    *_with_prefixes("2", "2bi", _P2, "x1 x2 b c Y v Z u",
                    ["u b c u x1 x2 b v c Y v Z u"], redispatch=True),
    *_with_prefixes("2", "2bii", _P2, "x1 x2 b c y1 y2 v Z u",
                    ["u x1 x2 b c v Z u b v y2 y1 c u"]),
    *_with_prefixes("2", "2biii", _P2, "x1 x2 b c y v x2 Z1 u",
                    ["u c y v b x2 Z1 u b c v x2 x1 u"]),
    *_with_prefixes("2", "2biii", _P2, "x1 x2 b c y v Z1 y u",
                    ["u x1 x2 b c v Z1 y c u b v y u"]),
    *_with_prefixes("2", "2biii", _P2, "x1 x2 b c y v x2 Z1 y Z2 u",
                    ["u x1 x2 v c y Z2 u b v y Z1~ x2 b c u",
                     "u x1 x2 y c v b u Z2~ y v x2 b c u"]),
    _t("3", "3", "b u a v d u c X v Y b", ["b u a v X~ c u d v Y b"]),
    _t("3", "3", "b u a v d u c X1 a xm1 v Y b", ["b u a xm1 v d u c X1 a v Y b"]),
    _t("3", "3", "b u a v d u c X1 a xm2 xm1 v Y b", ["b u a xm2 xm1 v d u c X1 a v Y b"]),
    _t("3", "3", "b u a v d u c X1 xm2 X2 y1 a xm2 xm1 v y1 Y b",
       ["b u a y1 X2~ xm2 xm1 v d u c X1 xm2 a v y1 Y b"]),
    _t("3", "3", "b u a v d u c X d Y a Z b", ["b u a Y~ d X~ c u d v a Z b"]),
    _t("3", "3", "b u a v d u c X a Y d Z b", ["b u d Y~ a X~ c u a v d Z b"]),
    _t("3", "3", "b u a v d u c X d Y v Z b", ["b u a v d X~ c u d Y v Z b"]),
    _t("3", "3", "b u a v d u c X v Y d Z b", ["b u a v X~ c u d Y~ v d Z b"]),
    _t("4", "4a/4c", "u b v d u c W c b X d Y v Z u",
       ["u d v b X d Y v Z u b c W c u", "u b X d Y v Z u d v b c W c u"]),
    _t("4", "4b/4d", "u b v d u c W c b X v Y d Z u",
       ["u c W c b v Y d u b X v d Z u", "u b X v Y d u c W c b v d Z u",
        "u b X v Y d Z u d v b c W c u", "u b c W c u d v b X v Y d Z u"]),
    _t("4", "4d", "u b v d u c w1 W1 c b X v Y1 w1 d Z u",
       ["u b v d u c w1 Y1~ v X~ b c W1~ w1 d Z u"], redispatch=True),
    _t("4", "4e", "u b v d u c W v X b c Y d Z u", ["u c W v X b u d Y~ c b v d Z u"]),
    _t("4", "4e", "u b v d u c b X v W c Y d Z u", ["u c W~ v X~ b u d Y~ c b v d Z u"]),
    _t("4", "4f", "u b v d u c W d X v Y c b Z u", ["u Z~ b v d W~ c b u d X v Y c u"]),
    _t("4", "4f", "u b v d u c Y v X d W c b Z u", ["u Z~ b v d W c b u d X~ v Y~ c u"]),
    _t("4", "4g", "u b v d u c W d X b c Y v Z u", ["u c Y v Z u d v b c W d X b u"]),
    _t("4", "4g", "u b v d u c b X d W c Y v Z u", ["u c Y v Z u d v b c W~ d X~ b u"]),
    _t("4", "4h", "u b v d u c b W c X v Y d Z u", ["u b W c b v Y d Z u c X v d u"]),
    _t("4", "4h", "u b v d u c W b c X v Y d Z u", ["u b W~ c b v Y d Z u c X v d u"]),
    _t("4", "4i", "u b v d u c b W c X d Y v Z u", ["u c Y v Z u d v b c W d X b u"]),
    _t("4", "4i", "u b v d u c W b c X d Y v Z u", ["u c Y v Z u d v b c W~ d X b u"]),
]


def _is_seg(tok: str) -> bool:
    return tok[0].isupper()


# ---------------------------------------------------------------------------
# matching and instantiation


def _match(form: Sequence[str], seq: Sequence, bind: dict) -> Iterator[dict]:
    n_form, n_seq = len(form), len(seq)
    # number of single-vertex tokens left from each position
    rest = [0] * (n_form + 1)
    for i in range(n_form - 1, -1, -1):
        rest[i] = rest[i + 1] + (0 if _is_seg(form[i]) else 1)

    def rec(i: int, j: int):
        if i == n_form:
            if j == n_seq:
                yield dict(bind)
            return
        tok = form[i]
        if _is_seg(tok):
            for L in range(0, n_seq - j - rest[i + 1] + 1):
                bind[tok] = tuple(seq[j:j + L])
                yield from rec(i + 1, j + L)
            bind.pop(tok, None)
            return
        if j >= n_seq:
            return
        val = bind.get(tok)
        if val is None:
            bind[tok] = seq[j]
            yield from rec(i + 1, j + 1)
            del bind[tok]
        elif val == seq[j]:
            yield from rec(i + 1, j + 1)

    yield from rec(0, 0)


def _instantiate(cand: Sequence[str], bind: dict) -> Iterator[list]:
    """Vertex sequences for a candidate; segment orientations are varied."""
    segs = [i for i, t in enumerate(cand) if _is_seg(t)]
    for mask in range(1 << len(segs)):
        flip = {segs[k] for k in range(len(segs)) if (mask >> k) & 1}
        out: list = []
        ok = True
        for i, tok in enumerate(cand):
            if _is_seg(tok):
                name = tok.rstrip("~")
                if name not in bind:
                    ok = False
                    break
                part = list(bind[name])
                if tok.endswith("~") != (i in flip):
                    part.reverse()
                out.extend(part)
            else:
                if tok not in bind:
                    ok = False
                    break
                out.append(bind[tok])
        if ok:
            yield out


def _role_maps(g: PlaneGraph, op: Pegging) -> list[dict]:
    base = dict(u=op.u, a=op.a, b=op.b, c=op.c, d=op.d)
    maps = [base, dict(u=op.u, a=op.d, b=op.c, c=op.b, d=op.a)]
    if g.has_edge(g.index(op.a), g.index(op.d)):
        maps.append(dict(u=op.u, a=op.b, b=op.a, c=op.d, d=op.c))
        maps.append(dict(u=op.u, a=op.c, b=op.d, c=op.a, d=op.b))
    return maps


def _orientations(seq: Sequence, start) -> Iterator[list]:
    b = body(seq)
    L = len(b)
    for s in (b, b[::-1]):
        for i in range(L):
            if s[i] == start:
                yield list(s[i:] + s[:i]) + [start]


def short_subcycles(seq: Sequence) -> list[list]:
    """Closed subwalks of length 3 or 4 in a closed circuit."""
    b = body(seq)
    L = len(b)
    out = []
    for i in range(L):
        for j in (3, 4):
            if L > j and b[i] == b[(i + j) % L]:
                out.append([b[(i + t) % L] for t in range(j + 1)])
    return out


def classify(seq: Sequence, op: Pegging) -> str:
    """Which of the four pegging cases a bad induced circuit falls in."""
    subs = [s for s in short_subcycles(seq) if op.u in s]
    if not subs:
        return "0"
    s = subs[0]
    i = s.index(op.u)
    cyc = s[:-1]
    cyc = cyc[i:] + cyc[:i]
    inner = {cyc[1], cyc[-1]}
    if len(cyc) == 3:
        return "1"
    if inner == {op.b, op.c}:
        return "2"
    if inner == {op.a, op.d}:
        return "3"
    return "4"


def _template_candidates(seq: Sequence, g: PlaneGraph, op: Pegging, case: str,
                         redispatch: bool) -> Iterator[tuple[str, list, bool]]:
    for role in _role_maps(g, op):
        for tmpl in TEMPLATES:
            if tmpl.case != case or (tmpl.redispatch and not redispatch):
                continue
            start = role[tmpl.form[0]]
            for rot in _orientations(seq, start):
                bind0 = {k: role[k] for k in ROLES}
                for bind in _match(tmpl.form, rot, bind0):
                    if "v" in bind and bind["v"] in (role["a"], role["b"], role["c"], role["d"], role["u"]):
                        continue
                    for cand in tmpl.candidates:
                        for out in _instantiate(cand, bind):
                            yield tmpl.name, out, tmpl.redispatch


# ---------------------------------------------------------------------------
# recombination


def recombine(seq: Sequence, anchors: set, budget: int = 20000, k: int = 4) -> list | None:
    """Re-order the segments between anchor occurrences into a good circuit."""
    b = body(seq)
    start = next((i for i, v in enumerate(b) if v in anchors), None)
    if start is None:
        return None
    rot = b[start:] + b[:start] + [b[start]]
    return splice(cut_at([rot], anchors), closed=True, k=k, budget=budget)


def _anchor_levels(g: PlaneGraph, seq: Sequence, op: Pegging) -> list[set]:
    base = {op.u, op.a, op.b, op.c, op.d}
    for s in short_subcycles(seq):
        if op.u in s:
            base |= set(s)
    lvl1 = set(base)
    for v in base:
        lvl1 |= {g.labels[w] for w in g.rot[g.index(v)]}
    lvl2 = set(lvl1)
    for v in lvl1:
        lvl2 |= {g.labels[w] for w in g.rot[g.index(v)]}
    return [base, lvl1, lvl2]


# ---------------------------------------------------------------------------
# driver


Resolver = Callable[[PlaneGraph], Trail]


def lift_pegging(circuit: Sequence, h: PlaneGraph, g: PlaneGraph, op: Pegging,
                 resolver: Resolver | None = None, tr: Transcript | None = None) -> Trail:
    """Extend a good circuit of ``h`` to ``g`` obtained by pegging ``ab`` and ``cd``.

    ``resolver`` solves a smaller 3-connected graph; it is needed only when
    the expanded graph has to be reduced differently (a 3-cycle unslide).
    """
    seq = induced_circuit(circuit, op)
    if is_good_circuit(g, seq):
        note(tr, f"lift pegging at {op.u}: induced circuit")
        _bump(tr, "pegging:induced")
        return Trail(seq, True)
    case = classify(seq, op)
    if case == "0":
        raise InternalCaseExhaustion("induced circuit is bad without a short subcycle at u", g, seq, op)
    found = _dispatch(seq, g, op, case, tr, depth=0)
    if found is not None:
        return found
    for level, anchors in enumerate(_anchor_levels(g, seq, op)):
        out = recombine(seq, anchors)
        if out is not None and is_good_circuit(g, out):
            note(tr, f"lift pegging at {op.u}: case {case}, recombined at anchor level {level}")
            _bump(tr, f"pegging:recombine{level}")
            return Trail(tuple(out), True)
    if resolver is not None:
        out = _restructure(g, resolver, tr)
        if out is not None:
            note(tr, f"lift pegging at {op.u}: case {case}, restructured through an unslide")
            _bump(tr, "pegging:restructure")
            return out
    raise InternalCaseExhaustion(f"no rerouting for pegging case {case}", g, seq, op)


def _bump(tr: Transcript | None, key: str) -> None:
    if tr is not None:
        tr.bump(key)


def _dispatch(seq, g, op, case, tr, depth) -> Trail | None:
    pending = []
    for name, out, redisp in _template_candidates(seq, g, op, case, redispatch=depth == 0):
        cl = tuple(out) if out[0] == out[-1] else close(out)
        if is_good_circuit(g, cl):
            note(tr, f"lift pegging at {op.u}: case {case}, rerouting {name}")
            _bump(tr, f"pegging:{name}")
            return Trail(cl, True)
        if redisp and depth == 0 and _is_eulerian(g, cl):
            pending.append(cl)
    for cl in pending:
        sub = classify(cl, op)
        if sub == "0":
            continue
        res = _dispatch(cl, g, op, sub, tr, depth + 1)
        if res is not None:
            return res
    return None


def _is_eulerian(g: PlaneGraph, seq: Sequence) -> bool:
    if len(seq) != g.m + 1:
        return False
    seen = set()
    for p, q in zip(seq, seq[1:]):
        if not g.has_label(p) or not g.has_label(q) or not g.has_edge(g.index(p), g.index(q)):
            return False
        e = frozenset((p, q))
        if e in seen:
            return False
        seen.add(e)
    return True


def _restructure(g: PlaneGraph, resolver: Resolver, tr) -> Trail | None:
    for v in range(g.n):
        for w in g.rot[v]:
            st = unslide(g, g.labels[v], g.labels[w])
            if st is None or not _in_class(st.reduced) or st.reduced.n < 8:
                continue
            if not apply(st.reduced, st.op).same_embedding(g):
                continue
            c = resolver(st.reduced)
            return lift_3cycle_slide(c.vertices, st.reduced, g, st.op, tr)
    return None
