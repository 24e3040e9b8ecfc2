"""Small reference complexes used by tests, demos, and the shipped corpus."""

from __future__ import annotations

from itertools import combinations

from .pseudomanifold import AbstractComplex


def hexagon_cycle():
    """Six edges in a circle, vertices alternately colored 1, 2."""
    edges = [(i, (i + 1) % 6) for i in range(6)]
    colors = [1 if v % 2 == 0 else 2 for v in range(6)]
    return AbstractComplex(1, 6, edges), colors


def octahedron():
    """Boundary of the octahedron with the antipodal 3-coloring.

    Vertices 2c-2 and 2c-1 are the color-c pair; each triangle picks one
    vertex from each pair.
    """
    triangles = [(a, b, c) for a in (0, 1) for b in (2, 3) for c in (4, 5)]
    colors = [1, 1, 2, 2, 3, 3]
    return AbstractComplex(2, 6, triangles), colors


def boundary_delta(k: int):
    """Boundary of the k-simplex: a (k-1)-sphere on k+1 vertices, uncolored
    (no regular coloring exists before subdivision)."""
    tops = list(combinations(range(k + 1), k))
    return AbstractComplex(k - 1, k + 1, tops)


def rp2_minimal():
    """The 6-vertex projective plane: one triangle per antipodal face pair
    of the icosahedron.  Closed, strongly connected, not orientable."""
    triangles = [
        (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
        (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3),
    ]
    return AbstractComplex(2, 6, triangles)


def two_triangles():
    """Two triangles along an edge: has boundary, fails validation."""
    return AbstractComplex(2, 4, [(0, 1, 2), (0, 1, 3)])


def disjoint_circles():
    """Two hexagon cycles with no common vertex: fails strong connectivity."""
    edges = [(i, (i + 1) % 6) for i in range(6)]
    edges += [(6 + i, 6 + (i + 1) % 6) for i in range(6)]
    return AbstractComplex(1, 12, edges)
