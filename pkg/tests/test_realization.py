"""Tests for the realization map and its chain identity.

The strongest facts verified here, all against independent bookkeeping:
the pushforward of the cover's fundamental cycle is a constant positive
multiple of the subdivided base cycle, the constant equals the number of
cover cells over each base simplex, and for the full cover it equals
2^(n-1) times the product of the compatible involution counts.
"""

import math
from itertools import permutations

import pytest

from cyclecover import corpus
from cyclecover.covering import CoverComplex, build_component, build_full
from cyclecover.errors import (
    DegreeNotConstantError,
    MatchingOverflowError,
    NotWellDefinedError,
)
from cyclecover.pseudomanifold import (
    ColoredPseudomanifold,
    barycentric_subdivide,
    colored_from_complex,
    is_coherent_orientation,
    orient,
)
from cyclecover.realization import (
    permutation_sign,
    predicted_multiplicity,
    realization_map,
    subdivided_cycle,
    verify_realization,
)


@pytest.fixture(scope="module")
def hex_cp():
    return ColoredPseudomanifold(*corpus.hexagon_cycle())


@pytest.fixture(scope="module")
def octa_cp():
    return ColoredPseudomanifold(*corpus.octahedron())


@pytest.fixture(scope="module")
def sd3_cp():
    bundle, _ = colored_from_complex(corpus.boundary_delta(3))
    return bundle


# ---------------------------------------------------------------------------
# permutation signs and the subdivided cycle

def reference_sign(seq):
    """Sign by explicit transposition sort."""
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        j = seq.index(min(seq[i:]), i)
        if j != i:
            seq[i], seq[j] = seq[j], seq[i]
            sign = -sign
    return sign


def test_permutation_sign_matches_reference():
    cases = 0
    for k in range(1, 6):
        for p in permutations(range(k)):
            assert permutation_sign(p) == reference_sign(p)
            cases += 1
    assert cases == sum(math.factorial(k) for k in range(1, 6))
    assert permutation_sign((10, 3, 7)) == reference_sign((10, 3, 7))


def boundary_vanishes(complex, signs):
    """Independent cycle test: the signed simplicial boundary is zero."""
    coeffs = {}
    for t, s in enumerate(complex.top_simplices):
        for i in range(len(s)):
            face = s[:i] + s[i + 1:]
            coeffs[face] = coeffs.get(face, 0) + signs[t] * (-1) ** i
    return all(c == 0 for c in coeffs.values())


@pytest.mark.parametrize("builder", [corpus.hexagon_cycle, corpus.octahedron])
def test_subdivided_cycle_is_a_cycle(builder):
    bundle = ColoredPseudomanifold(*builder())
    sd, signs = subdivided_cycle(bundle)
    assert len(signs) == len(sd.complex.top_simplices)
    assert set(signs.values()) <= {1, -1}
    index = {t: k for k, t in enumerate(sd.complex.top_simplices)}
    as_list = [0] * len(index)
    for t, sign in signs.items():
        as_list[index[t]] = sign
    assert boundary_vanishes(sd.complex, as_list)
    assert is_coherent_orientation(sd.complex, as_list)


def test_subdivided_cycle_flips_with_orientation(hex_cp):
    flipped = ColoredPseudomanifold(
        hex_cp.complex, hex_cp.coloring,
        orientation=[-s for s in hex_cp.orientation])
    _, signs = subdivided_cycle(hex_cp)
    _, flipped_signs = subdivided_cycle(flipped)
    assert flipped_signs == {t: -s for t, s in signs.items()}


# ---------------------------------------------------------------------------
# the vertex map

def test_vertex_images_hexagon(hex_cp):
    cover = build_component(hex_cp)
    rmap = realization_map(cover)
    classes = rmap.classes
    # codim-0 classes: the cell itself, imaging to its whole base edge
    for cid in range(classes.codim_start[1]):
        (cell_index, chain), = classes.members[cid]
        assert chain == ()
        sigma = cover.cells[cell_index].sigma
        assert rmap.image_faces[cid] == hex_cp.complex.top_simplices[sigma]
    # codim-1 classes image to the shared vertex of the chain's color
    for cid in range(classes.codim_start[1], len(classes.members)):
        chain = classes.chain_of_class[cid]
        face = rmap.image_faces[cid]
        assert len(face) == 1
        assert 1 << (hex_cp.coloring[face[0]] - 1) == chain[0]


def test_vertex_map_rejects_inconsistent_cells(octa_cp):
    cover = build_component(octa_cp)
    cells = list(cover.cells)
    # relabel one cell's base simplex with the antipodal triangle: facet
    # classes then straddle cells that share no vertex
    i = 0
    cells[i] = cells[i]._replace(sigma=cells[i].sigma ^ 0b111)
    broken = CoverComplex(cover.cp, cover.registry, cells, cover.index, cover.pc)
    with pytest.raises(NotWellDefinedError, match="distinct images"):
        realization_map(broken)


# ---------------------------------------------------------------------------
# degrees and the chain identity

def test_hexagon_degree_one(hex_cp):
    cover = build_component(hex_cp)
    report = verify_realization(realization_map(cover))
    assert report.degree == 1
    assert report.component_degrees == [1]
    assert report.degenerate_flags == 0
    assert report.nondegenerate_flags == 12
    assert predicted_multiplicity(hex_cp) == 1


def test_octahedron_component_degree(octa_cp):
    cover = build_component(octa_cp)
    rmap = realization_map(cover)
    report = verify_realization(rmap)
    assert report.degree == 2
    assert report.component_degrees == [2]
    # 16 cells, 12 flags each; exactly (n+1)! = 6 nondegenerate per cell
    assert report.degenerate_flags == 96
    assert report.nondegenerate_flags == 96
    assert is_coherent_orientation(rmap.tri.complex, report.orientation)
    # the degree is the number of cells over each base triangle
    fibers = {}
    for c in cover.cells:
        fibers[c.sigma] = fibers.get(c.sigma, 0) + 1
    assert set(fibers.values()) == {report.degree}


def test_octahedron_full_realizes_predicted_multiplicity(octa_cp):
    cover = build_full(octa_cp)
    report = verify_realization(realization_map(cover))
    assert report.degree == 128
    assert report.degree == predicted_multiplicity(octa_cp)
    assert len(report.component_degrees) == 64
    assert set(report.component_degrees) == {2}
    assert report.degenerate_flags == 6144
    assert report.nondegenerate_flags == 6144
    assert len(report.orientation) == 12288


def test_subdivided_tetrahedron_component_degree(sd3_cp):
    cover = build_component(sd3_cp)
    report = verify_realization(realization_map(cover))
    # 432 cells over 24 base triangles
    assert report.degree == 18
    assert report.component_degrees == [18]
    assert report.nondegenerate_flags == 432 * 6
    assert report.degenerate_flags == 432 * 6


def test_flag_counts_decompose(octa_cp):
    cover = build_component(octa_cp)
    report = verify_realization(realization_map(cover))
    n = octa_cp.n
    flags_per_cell = math.factorial(n) * math.factorial(n + 1)
    total = cover.num_cells * flags_per_cell
    assert report.degenerate_flags + report.nondegenerate_flags == total
    assert report.nondegenerate_flags == cover.num_cells * math.factorial(n + 1)


def test_predicted_multiplicity_subdivided_tetrahedron(sd3_cp):
    with pytest.raises(MatchingOverflowError):
        predicted_multiplicity(sd3_cp)
    assert predicted_multiplicity(sd3_cp, matching_cap=24) \
        == 2 * 1296 * 64 * 1296


def test_corrupted_images_fail_chain_identity(hex_cp):
    cover = build_component(hex_cp)
    rmap = realization_map(cover)
    a = rmap.classes.codim_start[1]
    images = list(rmap.vertex_images)
    # send one barycentric vertex somewhere else of the same codimension
    other = next(i for i in range(a, len(images)) if images[i] != images[a])
    rmap.vertex_images[a] = images[other]
    with pytest.raises(DegreeNotConstantError):
        verify_realization(rmap)
