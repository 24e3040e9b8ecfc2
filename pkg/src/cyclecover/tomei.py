"""The Tomei manifold as a permutahedral complex.

Take one permutahedron per element of (Z_2)^n and glue facet F_w of cell g to
facet F_w of cell g + e_{|w|}, where |w| is the size of the subset labeling
the facet.  Only the size of the label matters, so the 2^(n+1) - 2 facets of
each cell are matched through just n distinct reflections.
"""

from __future__ import annotations

from .cells import PermutahedralComplex
from .permutahedron import proper_subsets


def size_generator(subset: int) -> int:
    """The (Z_2)^n basis vector e_{|subset|} as a bitmask."""
    return 1 << (subset.bit_count() - 1)


def build_tomei(n: int) -> PermutahedralComplex:
    if n < 1:
        raise ValueError("dimension must be at least 1")
    glue = {}
    for g in range(1 << n):
        for w in proper_subsets(n):
            glue[(g, w)] = g ^ size_generator(w)
    return PermutahedralComplex(n, 1 << n, glue)
