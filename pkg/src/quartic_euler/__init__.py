"""Locally self-avoiding Eulerian circuits in quartic planar graphs."""
