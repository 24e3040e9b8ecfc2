"""Realize cycles of oriented closed pseudomanifolds by manifolds that
finitely cover a Tomei manifold, and machine-verify every step."""

from .cells import (
    FaceClasses,
    PermutahedralComplex,
    Triangulation,
    euler_characteristic,
    face_classes,
    orientable,
    triangulate,
    verify_surface,
)
from .covering import (
    CoverCell,
    CoverComplex,
    CoveringReport,
    InvolutionRegistry,
    build_component,
    build_full,
    cross_facet,
    verify_covering,
)
from .homology import (
    HomologyGroup,
    SmithForm,
    betti_numbers,
    boundary_matrices,
    fundamental_class,
    homology,
    smith_normal_form,
)
from .involutions import (
    canonical_involution,
    count_compatible_involutions,
    enumerate_compatible_involutions,
)
from .pseudomanifold import (
    AbstractComplex,
    BarycentricSubdivision,
    ColoredPseudomanifold,
    barycentric_subdivide,
    bipartition,
    check_regular_coloring,
    colored_from_complex,
    orient,
    validate_pseudomanifold,
)
from .realization import (
    RealizationMap,
    RealizationReport,
    predicted_multiplicity,
    realization_map,
    subdivided_cycle,
    verify_realization,
)
from .tomei import build_tomei

__all__ = [
    "AbstractComplex",
    "BarycentricSubdivision",
    "ColoredPseudomanifold",
    "CoverCell",
    "CoverComplex",
    "CoveringReport",
    "FaceClasses",
    "HomologyGroup",
    "InvolutionRegistry",
    "PermutahedralComplex",
    "RealizationMap",
    "RealizationReport",
    "SmithForm",
    "Triangulation",
    "barycentric_subdivide",
    "betti_numbers",
    "bipartition",
    "boundary_matrices",
    "build_component",
    "build_full",
    "build_tomei",
    "canonical_involution",
    "check_regular_coloring",
    "colored_from_complex",
    "count_compatible_involutions",
    "cross_facet",
    "enumerate_compatible_involutions",
    "euler_characteristic",
    "face_classes",
    "fundamental_class",
    "homology",
    "orient",
    "orientable",
    "predicted_multiplicity",
    "realization_map",
    "smith_normal_form",
    "subdivided_cycle",
    "triangulate",
    "validate_pseudomanifold",
    "verify_covering",
    "verify_realization",
    "verify_surface",
]
