from quartic_euler.oracle import SearchConfig, enumerate_trails, is_locally_self_avoiding
from quartic_euler.obstructions import is_octahedron
from quartic_euler.plane_graph import from_rotation, identify_pendants, split_vertex
from quartic_euler.solver.common import rotate_to
from quartic_euler.solver.fixtures import H_ROTATION, H_TRAILS
from quartic_euler.solver.layers import _h_trails
from quartic_euler.solver.rearrange import check_pair


def _first_split(h):
    found = []

    def visit(t):
        c = list(rotate_to(t.vertices, "x"))
        i = c.index("y")
        p, q = c[: i + 1], c[i:][::-1]
        if len(p) >= 4 and len(q) >= 4 and is_locally_self_avoiding(p, False) and is_locally_self_avoiding(q, False):
            found.append((tuple(p), tuple(q)))
            return True

    enumerate_trails(h, SearchConfig(k=4), visit, prune=False)
    return found[0]


def test_h_is_split_octahedron():
    h = from_rotation(H_ROTATION)
    # x and y are the two halves of one octahedron vertex
    w, px = split_vertex(h, "x", ["x1", "x2"])
    w, py = split_vertex(w, "y", ["y1", "y2"])
    assert is_octahedron(identify_pendants(w, px + py, "u"))


def test_h_trails_regenerate():
    assert _first_split(from_rotation(H_ROTATION)) == H_TRAILS


def test_h_trails_are_good_and_cover():
    h = from_rotation(H_ROTATION)
    assert check_pair(h, *H_TRAILS) is None
    assert all(len(t) - 1 >= 3 for t in H_TRAILS)


def test_h_trails_transported():
    h = from_rotation(H_ROTATION)
    for x, y in (("x", "y"), ("y", "x")):
        t1, t2 = _h_trails(h, x, y)
        assert t1[0] == x and t2[0] == x and t1[-1] == y and t2[-1] == y
        assert check_pair(h, t1, t2) is None
