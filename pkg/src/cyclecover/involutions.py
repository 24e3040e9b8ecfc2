"""Part-swapping involutions compatible with a set of colors.

For a colored pseudomanifold with top simplices split into parts U+ and U-,
an involution L on the top simplices is *compatible with the color subset w*
when it is fixed-point free, swaps the parts, and for every simplex s the
simplices s and L(s) carry the same vertex in each color of w.  These are
exactly the perfect matchings of the bipartite graph joining compatible
opposite-part pairs, so existence is a matching question and the count is
obtained by exhaustive backtracking.

Involutions are stored as permutation tuples over top-simplex indices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MatchingOverflowError
from .pseudomanifold import ColoredPseudomanifold

Involution = tuple[int, ...]

DEFAULT_MATCHING_CAP = 16


def compatible(cp: ColoredPseudomanifold, i: int, j: int, subset: int) -> bool:
    """Do top simplices i and j share their color-c vertex for every c in
    the subset?"""
    bi, bj = cp.by_color[i], cp.by_color[j]
    m = subset
    while m:
        c = m & -m
        if bi[c.bit_length() - 1] != bj[c.bit_length() - 1]:
            return False
        m ^= c
    return True


def extend_to_facet_colors(subset: int, n: int) -> int:
    """Grow a color subset to size n by adding the smallest missing colors;
    the result labels a facet color set of every top simplex."""
    if subset == 0 or subset >> (n + 1):
        raise ValueError("subset must be a nonempty set of the n+1 colors")
    ext, c = subset, 0
    while ext.bit_count() < n:
        while ext >> c & 1:
            c += 1
        ext |= 1 << c
    return ext


def canonical_involution(cp: ColoredPseudomanifold, subset: int) -> Involution:
    """Pair every top simplex with its neighbor across the facet colored by
    the canonical size-n extension of the subset."""
    ext = extend_to_facet_colors(subset, cp.n)
    return tuple(cp.neighbor_across(i, ext) for i in range(cp.top_count))


def is_compatible_involution(cp: ColoredPseudomanifold, perm, subset: int) -> bool:
    if len(perm) != cp.top_count:
        return False
    for i, j in enumerate(perm):
        if j == i or not 0 <= j < cp.top_count:
            return False
        if perm[j] != i or cp.parts[i] == cp.parts[j]:
            return False
        if not compatible(cp, i, j, subset):
            return False
    return True


@dataclass
class CompatibilityGraph:
    """Bipartite graph of compatible opposite-part pairs for one subset."""

    subset: int
    plus: list[int]
    minus: list[int]
    adjacency: list[list[int]]  # per plus position, positions into minus

    def degree_zero_nodes(self) -> list[int]:
        return [self.plus[p] for p, nbrs in enumerate(self.adjacency) if not nbrs]


def compatibility_graph(cp: ColoredPseudomanifold, subset: int) -> CompatibilityGraph:
    adjacency = []
    for i in cp.plus:
        adjacency.append([m for m, j in enumerate(cp.minus)
                          if compatible(cp, i, j, subset)])
    return CompatibilityGraph(subset, list(cp.plus), list(cp.minus), adjacency)


def _matchings(graph: CompatibilityGraph):
    """Yield perfect matchings as tuples ``minus position per plus position``,
    in lexicographic order."""
    k = len(graph.plus)
    if len(graph.minus) != k:
        return
    choice = [-1] * k
    used = [False] * k

    def backtrack(p: int):
        if p == k:
            yield tuple(choice)
            return
        for m in graph.adjacency[p]:
            if not used[m]:
                used[m] = True
                choice[p] = m
                yield from backtrack(p + 1)
                used[m] = False
        choice[p] = -1

    yield from backtrack(0)


def _matching_to_involution(graph: CompatibilityGraph, matching) -> Involution:
    size = len(graph.plus) + len(graph.minus)
    perm = [-1] * size
    for p, m in enumerate(matching):
        perm[graph.plus[p]] = graph.minus[m]
        perm[graph.minus[m]] = graph.plus[p]
    return tuple(perm)


def enumerate_compatible_involutions(cp: ColoredPseudomanifold, subset: int,
                                     cap: int = DEFAULT_MATCHING_CAP) -> list[Involution]:
    """All involutions compatible with the subset, in a fixed order.

    Exhaustive over perfect matchings; refuses complexes with more than
    ``cap`` top simplices because the matching count can grow factorially.
    """
    if cp.top_count > cap:
        raise MatchingOverflowError(
            f"{cp.top_count} top simplices exceed the matching cap {cap}")
    graph = compatibility_graph(cp, subset)
    return [_matching_to_involution(graph, m) for m in _matchings(graph)]


def count_compatible_involutions(cp: ColoredPseudomanifold, subset: int,
                                 cap: int = DEFAULT_MATCHING_CAP) -> int:
    return len(enumerate_compatible_involutions(cp, subset, cap))
