"""Finite covers of the Tomei manifold from tuples of involutions.

A cover cell is a triple (sigma, tuple_id, g): a top simplex of the colored
pseudomanifold, an interned tuple holding one compatible involution per color
subset, and an element of (Z_2)^n whose parity must match the part of sigma
(plus part iff evenly many bits).  Crossing facet F_w sends the triple to

    (L_w(sigma),  conjugate the components indexed by subsets of w,  g + e_|w|)

where L_w is the tuple's component at w.  This is an involution without fixed
points, it preserves the parity constraint, and crossings along nested facet
labels commute, so the glued cells form a permutahedral complex; forgetting
everything but g projects it onto the Tomei manifold cell by cell.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from itertools import product
from typing import NamedTuple

from .cells import FaceClasses, PermutahedralComplex, face_classes
from .errors import CapExceededError, InconsistentGluingError, NotACoveringError
from .involutions import (
    DEFAULT_MATCHING_CAP,
    Involution,
    canonical_involution,
    enumerate_compatible_involutions,
    is_compatible_involution,
)
from .permutahedron import mask_elements, proper_subsets
from .pseudomanifold import ColoredPseudomanifold
from .tomei import build_tomei, size_generator

DEFAULT_MAX_CELLS = 10 ** 6


def parity_sign(g: int) -> int:
    """The character of (Z_2)^n taking -1 on every generator."""
    return -1 if g.bit_count() % 2 else 1


class CoverCell(NamedTuple):
    sigma: int
    tuple_id: int
    g: int


class InvolutionRegistry:
    """Interning pool for involutions and involution tuples.

    Tuples are validated on first intern: the component in the slot of color
    subset w must be an involution compatible with w.  Conjugations are
    memoized, so repeated facet crossings stay cheap.
    """

    def __init__(self, cp: ColoredPseudomanifold):
        self.cp = cp
        self.subsets = proper_subsets(cp.n)
        self.slot_of = {w: k for k, w in enumerate(self.subsets)}
        self._involutions: list[Involution] = []
        self._inv_ids: dict[Involution, int] = {}
        self._tuples: list[tuple[int, ...]] = []
        self._tuple_ids: dict[tuple[int, ...], int] = {}
        self._conj: dict[tuple[int, int], int] = {}
        self._validated: set[tuple[int, int]] = set()

    def intern_involution(self, perm: Involution) -> int:
        iid = self._inv_ids.get(perm)
        if iid is None:
            iid = len(self._involutions)
            self._involutions.append(perm)
            self._inv_ids[perm] = iid
        return iid

    def involution(self, iid: int) -> Involution:
        return self._involutions[iid]

    def intern_tuple(self, inv_ids) -> int:
        key = tuple(inv_ids)
        tid = self._tuple_ids.get(key)
        if tid is None:
            if len(key) != len(self.subsets):
                raise ValueError("tuple must have one involution per proper subset")
            for slot, iid in enumerate(key):
                if (iid, slot) not in self._validated:
                    if not is_compatible_involution(
                            self.cp, self._involutions[iid], self.subsets[slot]):
                        raise ValueError(
                            f"component for subset {mask_elements(self.subsets[slot])} "
                            f"is not a compatible involution")
                    self._validated.add((iid, slot))
            tid = len(self._tuples)
            self._tuples.append(key)
            self._tuple_ids[key] = tid
        return tid

    def components(self, tid: int) -> tuple[int, ...]:
        return self._tuples[tid]

    def conjugate(self, outer_id: int, inner_id: int) -> int:
        key = (outer_id, inner_id)
        cid = self._conj.get(key)
        if cid is None:
            outer = self._involutions[outer_id]
            inner = self._involutions[inner_id]
            cid = self.intern_involution(tuple(outer[inner[outer[i]]]
                                               for i in range(len(outer))))
            self._conj[key] = cid
        return cid

    def canonical_tuple(self) -> int:
        return self.intern_tuple(
            self.intern_involution(canonical_involution(self.cp, w))
            for w in self.subsets)

    @property
    def tuple_count(self) -> int:
        return len(self._tuples)


def in_cover_set(cp: ColoredPseudomanifold, cell: CoverCell) -> bool:
    """Membership in the cover cell set: g in range and parity matching."""
    if not 0 <= cell.g < 1 << cp.n:
        return False
    return (cp.parts[cell.sigma] == 1) == (parity_sign(cell.g) == 1)


def cross_facet(reg: InvolutionRegistry, cell: CoverCell, subset: int) -> CoverCell:
    """The gluing involution across facet F_subset."""
    ids = reg.components(cell.tuple_id)
    lam_id = ids[reg.slot_of[subset]]
    new_sigma = reg.involution(lam_id)[cell.sigma]
    new_ids = list(ids)
    for slot, gamma in enumerate(reg.subsets):
        if gamma & ~subset == 0:  # gamma inside the crossed label
            new_ids[slot] = reg.conjugate(lam_id, ids[slot])
    return CoverCell(new_sigma, reg.intern_tuple(new_ids), cell.g ^ size_generator(subset))


@dataclass
class CoverComplex:
    """A set of cover cells closed under facet crossings, as a
    permutahedral complex plus the projection data."""

    cp: ColoredPseudomanifold
    registry: InvolutionRegistry
    cells: list[CoverCell]
    index: dict[CoverCell, int]
    pc: PermutahedralComplex

    @property
    def num_cells(self) -> int:
        return len(self.cells)

    def base_cell(self, i: int) -> int:
        return self.cells[i].g


def seed_cell(reg: InvolutionRegistry) -> CoverCell:
    """Deterministic starting cell: the smallest plus-part simplex, the
    canonical involution tuple, and g = 0."""
    return CoverCell(min(reg.cp.plus), reg.canonical_tuple(), 0)


def build_component(cp: ColoredPseudomanifold, seed: CoverCell | None = None,
                    max_cells: int = DEFAULT_MAX_CELLS,
                    registry: InvolutionRegistry | None = None) -> CoverComplex:
    """Breadth-first closure of one cell under all facet crossings."""
    reg = registry or InvolutionRegistry(cp)
    if seed is None:
        seed = seed_cell(reg)
    if not in_cover_set(cp, seed):
        raise ValueError(f"seed {seed} violates the parity constraint")
    reg.intern_tuple(reg.components(seed.tuple_id))
    cells = [seed]
    index = {seed: 0}
    glue = {}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for w in reg.subsets:
            neighbor = cross_facet(reg, cells[i], w)
            j = index.get(neighbor)
            if j is None:
                if len(cells) >= max_cells:
                    raise CapExceededError(
                        f"component exceeded {max_cells} cells", max_cells, len(cells))
                j = len(cells)
                cells.append(neighbor)
                index[neighbor] = j
                queue.append(j)
            glue[(i, w)] = j
    pc = PermutahedralComplex(cp.n, len(cells), glue)
    return CoverComplex(cp, reg, cells, index, pc)


def build_full(cp: ColoredPseudomanifold,
               max_cells: int = DEFAULT_MAX_CELLS,
               matching_cap: int = DEFAULT_MATCHING_CAP) -> CoverComplex:
    """Every cover cell at once: all top simplices, all tuples from the full
    product of compatible involutions, all parity-consistent g."""
    reg = InvolutionRegistry(cp)
    pools = [enumerate_compatible_involutions(cp, w, matching_cap)
             for w in reg.subsets]
    total = cp.top_count
    for pool in pools:
        total *= len(pool)
    total *= 1 << (cp.n - 1)
    if total > max_cells:
        raise CapExceededError(
            f"full cover set has {total} cells, more than the cap {max_cells}",
            max_cells, total)
    pool_ids = [[reg.intern_involution(p) for p in pool] for pool in pools]
    cells = []
    for combo in product(*pool_ids):
        tid = reg.intern_tuple(combo)
        for sigma in range(cp.top_count):
            for g in range(1 << cp.n):
                cell = CoverCell(sigma, tid, g)
                if in_cover_set(cp, cell):
                    cells.append(cell)
    cells.sort()
    index = {cell: i for i, cell in enumerate(cells)}
    glue = {}
    for i, cell in enumerate(cells):
        for w in reg.subsets:
            neighbor = cross_facet(reg, cell, w)
            j = index.get(neighbor)
            if j is None:
                raise InconsistentGluingError(
                    "facet crossing left the full cover set; conjugation closure failed")
            glue[(i, w)] = j
    pc = PermutahedralComplex(cp.n, len(cells), glue)
    return CoverComplex(cp, reg, cells, index, pc)


# ---------------------------------------------------------------------------
# verification

@dataclass
class CoveringReport:
    degree: int
    cell_fibers: dict[int, int]
    class_fibers: dict[int, int]
    cover_class_to_base: list[int]

    @property
    def ok(self) -> bool:
        return True  # verify_covering raises on any failure


def verify_cell_projection(cover_pc: PermutahedralComplex, projection,
                           base: PermutahedralComplex,
                           cover_classes: FaceClasses | None = None) -> CoveringReport:
    """Certify that a cell map is a covering of permutahedral complexes.

    ``projection[i]`` is the base cell under cover cell i (the permutahedron
    coordinate maps by the identity).  Checks, in order: the projection
    commutes with every facet crossing; fibers over cells are constant with
    integral degree; every face class maps onto a base class of the same
    size; face class fibers all have that same degree.
    """
    if base.n != cover_pc.n:
        raise NotACoveringError("base and cover dimensions differ")
    if len(projection) != cover_pc.num_cells:
        raise NotACoveringError("projection must assign a base cell to every cell")

    for (i, w), j in cover_pc.glue.items():
        if projection[j] != base.neighbor(projection[i], w):
            raise NotACoveringError(
                f"projection does not commute with crossing {mask_elements(w)} "
                f"at cell {i}")

    if cover_pc.num_cells % base.num_cells:
        raise NotACoveringError(
            f"{cover_pc.num_cells} cells cannot evenly cover {base.num_cells}")
    degree = cover_pc.num_cells // base.num_cells

    fibers = Counter(projection)
    if any(fibers[g] != degree for g in range(base.num_cells)):
        raise NotACoveringError(f"cell fibers are not constant: {dict(fibers)}")

    cover_cls = cover_classes or face_classes(cover_pc)
    base_cls = face_classes(base)
    cover_to_base: list[int] = []
    for members in cover_cls.members:
        images = {base_cls.class_of[(projection[i], chain)] for i, chain in members}
        if len(images) != 1:
            raise NotACoveringError(
                f"face class with chain {members[0][1]} maps to several base classes")
        bid = images.pop()
        if len(members) != len(base_cls.members[bid]):
            raise NotACoveringError(
                "face class does not map isomorphically onto its image class")
        cover_to_base.append(bid)

    class_fibers = Counter(cover_to_base)
    for bid in range(len(base_cls.members)):
        if class_fibers[bid] != degree:
            raise NotACoveringError(
                f"face class fiber over base class {bid} has size "
                f"{class_fibers[bid]}, expected {degree}")

    return CoveringReport(degree, dict(fibers), dict(class_fibers), cover_to_base)


def verify_covering(cover: CoverComplex,
                    base: PermutahedralComplex | None = None,
                    cover_classes: FaceClasses | None = None) -> CoveringReport:
    """Certify the parity constraint on the cover cells, then certify that
    forgetting (sigma, tuple) is a covering of the Tomei manifold."""
    cp = cover.cp
    base = base or build_tomei(cp.n)
    for cell in cover.cells:
        if not in_cover_set(cp, cell):
            raise NotACoveringError(f"cell {cell} violates the parity constraint")
    projection = [cover.base_cell(i) for i in range(cover.num_cells)]
    return verify_cell_projection(cover.pc, projection, base, cover_classes)
