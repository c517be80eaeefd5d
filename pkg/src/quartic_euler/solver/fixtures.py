"""Trails that are drawn rather than written, precomputed by exhaustive search.

``H`` is the octahedron with one vertex split into two degree-2 vertices
``x`` and ``y`` that keep consecutive neighbours.  Its trails were found by
enumerating the Eulerian circuits of ``H`` and keeping the first split at
``x`` and ``y`` into two good trails of length at least 3;
``tests/test_fixtures.py`` reruns that search.
"""

H_ROTATION = {
    "p": ["x", "q", "t", "r"],
    "q": ["p", "y", "s", "t"],
    "r": ["t", "s", "x", "p"],
    "s": ["r", "t", "q", "y"],
    "t": ["q", "s", "r", "p"],
    "x": ["r", "p"],
    "y": ["s", "q"],
}

H_TRAILS = (
    ("x", "r", "s", "t", "p", "q", "y"),
    ("x", "p", "r", "t", "q", "s", "y"),
)
