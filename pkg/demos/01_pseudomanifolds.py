"""Validation, coloring, and orientation of closed pseudomanifolds.

Walks the bundled test complexes through the entry-level checks: closedness,
vertex colorings that are regular (one color per vertex per top simplex),
bipartite facet-dual graphs, and coherent orientations.  Failures carry
explicit witnesses; this script shows a few on purpose.
"""

from cyclecover import corpus
from cyclecover.errors import NonOrientableError
from cyclecover.pseudomanifold import (
    barycentric_subdivide,
    bipartition,
    check_regular_coloring,
    orient,
    validate_pseudomanifold,
)


def show_validation(name, c):
    report = validate_pseudomanifold(c)
    print(f"{name}: n={c.n}, {c.num_vertices} vertices, "
          f"{len(c.top_simplices)} top simplices -> "
          f"{'closed pseudomanifold' if report.ok else report.summary()}")
    return report.ok


def main():
    print("== closedness ==")
    hexagon, hex_colors = corpus.hexagon_cycle()
    octa, octa_colors = corpus.octahedron()
    show_validation("hexagon", hexagon)
    show_validation("octahedron", octa)
    show_validation("boundary of the 4-simplex", corpus.boundary_delta(4))
    show_validation("two triangles sharing an edge", corpus.two_triangles())

    print("\n== regular colorings ==")
    print(f"octahedron shipped coloring regular: "
          f"{check_regular_coloring(octa, octa_colors)}")
    rp2 = corpus.rp2_minimal()
    print(f"minimal projective plane has no shipped coloring; subdividing")
    sd = barycentric_subdivide(rp2)
    print(f"subdivision: {sd.complex.num_vertices} vertices, "
          f"{len(sd.complex.top_simplices)} top simplices, coloring regular: "
          f"{check_regular_coloring(sd.complex, sd.coloring)}")

    print("\n== bipartition of the facet-dual graph ==")
    sides = bipartition(octa, octa_colors)
    plus = sum(1 for s in sides if s == 1)
    print(f"octahedron: {plus} positive / {len(sides) - plus} negative cells")

    print("\n== orientation ==")
    orientation = orient(octa)
    print(f"octahedron orientation signs: {orientation}")
    try:
        orient(sd.complex)
    except NonOrientableError as e:
        print(f"subdivided projective plane: non-orientable, witness facet "
              f"{e.witness}")


if __name__ == "__main__":
    main()
