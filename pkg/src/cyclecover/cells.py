"""Complexes of permutahedra glued facet-to-facet.

A permutahedral complex is a finite set of n-permutahedra together with a
pairing of their facets.  Facet F_w of a cell is always glued to facet F_w of
the partner cell by the identity on the permutahedron coordinate, which is
exactly how both the Tomei manifold and its covers are assembled; the face
identifications of lower-dimensional faces follow from the facet pairing.

Face classes of codimension k are the orbits of (cell, chain) pairs under the
gluings along the k facets the face lies in.  Those gluings commute (their
labels are nested), so each orbit has size exactly 2^k whenever the gluing
is consistent; this is checked, not assumed.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import InconsistentGluingError
from .permutahedron import (
    Chain,
    enumerate_faces,
    mask_elements,
    proper_subsets,
    triangulation_flags,
)
from .pseudomanifold import AbstractComplex, orient


class PermutahedralComplex:
    """Cells 0..num_cells-1 with a facet pairing ``glue[cell][subset]``."""

    def __init__(self, n: int, num_cells: int, glue: dict):
        self.n = n
        self.num_cells = num_cells
        self.subsets = proper_subsets(n)
        self.glue = dict(glue)
        self._check()

    def _check(self):
        for cell in range(self.num_cells):
            for w in self.subsets:
                j = self.glue.get((cell, w))
                if j is None:
                    raise InconsistentGluingError(f"cell {cell} facet {mask_elements(w)} unglued")
                if not 0 <= j < self.num_cells:
                    raise InconsistentGluingError(f"glue target {j} out of range")
                if j == cell:
                    raise InconsistentGluingError(
                        f"facet {mask_elements(w)} of cell {cell} glued to itself")
                if self.glue.get((j, w)) != cell:
                    raise InconsistentGluingError(
                        f"gluing across {mask_elements(w)} is not an involution at cell {cell}")
        # identifications around a codimension-2 face must close up
        for cell in range(self.num_cells):
            for w1 in self.subsets:
                for w2 in self.subsets:
                    if w1 != w2 and (w1 & w2) == w1:
                        a = self.glue[(self.glue[(cell, w1)], w2)]
                        b = self.glue[(self.glue[(cell, w2)], w1)]
                        if a != b:
                            raise InconsistentGluingError(
                                f"gluings across nested facets {mask_elements(w1)} "
                                f"and {mask_elements(w2)} do not commute at cell {cell}")

    def neighbor(self, cell: int, subset: int) -> int:
        return self.glue[(cell, subset)]

    def __repr__(self):
        return f"PermutahedralComplex(n={self.n}, cells={self.num_cells})"


@dataclass
class FaceClasses:
    """Orbits of (cell, chain) pairs; class ids grouped by codimension."""

    pc: PermutahedralComplex
    chains_by_codim: list[list[Chain]]
    class_of: dict[tuple[int, Chain], int]
    members: list[list[tuple[int, Chain]]]
    chain_of_class: list[Chain]
    codim_start: list[int] = field(default_factory=list)

    def codim_of(self, class_id: int) -> int:
        return len(self.chain_of_class[class_id])

    def counts_by_codim(self) -> list[int]:
        counts = [0] * (self.pc.n + 1)
        for chain in self.chain_of_class:
            counts[len(chain)] += 1
        return counts


def face_classes(pc: PermutahedralComplex) -> FaceClasses:
    """Identify faces across the gluing.  Deterministic: codimension-major,
    then chain enumeration order, then lowest cell index."""
    chains_by_codim = [enumerate_faces(pc.n, k) for k in range(pc.n + 1)]
    class_of: dict[tuple[int, Chain], int] = {}
    members: list[list[tuple[int, Chain]]] = []
    chain_of_class: list[Chain] = []
    codim_start = []
    for k, chains in enumerate(chains_by_codim):
        codim_start.append(len(members))
        for chain in chains:
            for cell in range(pc.num_cells):
                if (cell, chain) in class_of:
                    continue
                cid = len(members)
                orbit = [(cell, chain)]
                class_of[(cell, chain)] = cid
                queue = deque([cell])
                while queue:
                    i = queue.popleft()
                    for w in chain:
                        j = pc.neighbor(i, w)
                        if (j, chain) not in class_of:
                            class_of[(j, chain)] = cid
                            orbit.append((j, chain))
                            queue.append(j)
                members.append(orbit)
                chain_of_class.append(chain)
                if len(orbit) != 1 << len(chain):
                    raise InconsistentGluingError(
                        f"face orbit of {chain} at cell {cell} has size {len(orbit)}, "
                        f"expected {1 << len(chain)}")
    return FaceClasses(pc, chains_by_codim, class_of, members, chain_of_class, codim_start)


def euler_characteristic(pc: PermutahedralComplex,
                         classes: FaceClasses | None = None) -> int:
    classes = classes or face_classes(pc)
    counts = classes.counts_by_codim()
    return sum((-1) ** (pc.n - k) * counts[k] for k in range(pc.n + 1))


@dataclass
class Triangulation:
    """Barycentric triangulation of a permutahedral complex.

    Vertices of the simplicial complex are face classes; each top simplex is
    a flag of one cell, recoverable through ``source``.
    """

    pc: PermutahedralComplex
    classes: FaceClasses
    complex: AbstractComplex
    source: dict[tuple[int, ...], tuple[int, tuple[Chain, ...]]]

    def cell_of_top(self, top: tuple[int, ...]) -> int:
        return self.source[top][0]


def triangulate(pc: PermutahedralComplex,
                classes: FaceClasses | None = None) -> Triangulation:
    classes = classes or face_classes(pc)
    flags = triangulation_flags(pc.n)
    tops = []
    source = {}
    for cell in range(pc.num_cells):
        for flag in flags:
            ids = tuple(sorted(classes.class_of[(cell, c)] for c in flag))
            if len(set(ids)) != pc.n + 1:
                raise InconsistentGluingError("flag vertices collapsed in the quotient")
            tops.append(ids)
            source[ids] = (cell, flag)
    if len(set(tops)) != len(tops):
        raise InconsistentGluingError("two flags produced the same simplex")
    complex_ = AbstractComplex(pc.n, len(classes.members), tops)
    return Triangulation(pc, classes, complex_, source)


@dataclass
class SurfaceReport:
    bad_edges: list = field(default_factory=list)
    bad_vertex_links: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.bad_edges and not self.bad_vertex_links


def verify_surface(tri: Triangulation) -> SurfaceReport:
    """For n = 2: every edge in exactly two triangles and every vertex link
    a single closed cycle."""
    if tri.pc.n != 2:
        raise ValueError("surface checks apply to n = 2 only")
    report = SurfaceReport()
    link: dict[int, list[tuple[int, int]]] = {}
    for a, b, c in tri.complex.top_simplices:
        link.setdefault(a, []).append((b, c))
        link.setdefault(b, []).append((a, c))
        link.setdefault(c, []).append((a, b))
    for facet, cof in tri.complex.facet_cofaces.items():
        if len(cof) != 2:
            report.bad_edges.append((facet, len(cof)))
    for v in range(tri.complex.num_vertices):
        edges = link.get(v, [])
        degree: dict[int, int] = {}
        for a, b in edges:
            degree[a] = degree.get(a, 0) + 1
            degree[b] = degree.get(b, 0) + 1
        if any(d != 2 for d in degree.values()):
            report.bad_vertex_links.append(v)
            continue
        # connectivity of the link graph
        start = edges[0][0]
        seen = {start}
        stack = [start]
        adj: dict[int, list[int]] = {}
        for a, b in edges:
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
        while stack:
            u = stack.pop()
            for wv in adj[u]:
                if wv not in seen:
                    seen.add(wv)
                    stack.append(wv)
        if len(seen) != len(degree):
            report.bad_vertex_links.append(v)
    report.bad_edges.sort()
    report.bad_vertex_links.sort()
    return report


def orientable(pc: PermutahedralComplex, tri: Triangulation | None = None) -> bool:
    from .errors import NonOrientableError

    tri = tri or triangulate(pc)
    try:
        orient(tri.complex)
    except NonOrientableError:
        return False
    return True
