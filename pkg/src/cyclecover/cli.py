"""Command-line verification driver.

Subcommands run one pipeline stage each; ``verify`` runs the whole chain on
one input complex and reports a claims ledger: one line per mathematical
statement checked, with pass/fail status and a diagnostic detail.  Reports
contain no timestamps, so identical runs produce identical bytes.

Exit codes: 0 all enabled checks pass, 1 a check failed or a cap was hit,
2 usage or input errors.
"""

from __future__ import annotations

import argparse
import hashlib
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import formats
from .cells import euler_characteristic, face_classes, orientable, triangulate, verify_surface
from .covering import DEFAULT_MAX_CELLS, build_component, build_full, verify_covering
from .errors import CapExceededError, MatchingOverflowError, TopologyError
from .homology import homology
from .involutions import (
    DEFAULT_MATCHING_CAP,
    canonical_involution,
    enumerate_compatible_involutions,
)
from .permutahedron import mask_elements, proper_subsets
from .pseudomanifold import (
    ColoredPseudomanifold,
    barycentric_subdivide,
    bipartition,
    check_regular_coloring,
    orient,
    validate_pseudomanifold,
)
from .realization import realization_map, verify_realization
from .tomei import build_tomei

MAX_CELLS_ENV = "REALIZER_MAX_CELLS"


@dataclass
class RunConfig:
    mode: str
    input: str | None = None
    n: int | None = None
    out: str | None = None
    cells_out: str | None = None
    full: bool = False
    max_cells: int = DEFAULT_MAX_CELLS
    matching_cap: int = DEFAULT_MATCHING_CAP
    deterministic: bool = True  # reserved; reports never carry timestamps

    def __post_init__(self):
        if self.max_cells <= 0 or self.matching_cap <= 0:
            raise ValueError("caps must be positive")


def default_max_cells() -> int:
    raw = os.environ.get(MAX_CELLS_ENV)
    if raw is None:
        return DEFAULT_MAX_CELLS
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{MAX_CELLS_ENV} must be an integer, got {raw!r}")
    if value <= 0:
        raise ValueError(f"{MAX_CELLS_ENV} must be positive, got {value}")
    return value


# ---------------------------------------------------------------------------
# the claims ledger

@dataclass
class Claims:
    """Ordered list of checked statements with pass/fail status."""

    entries: list[dict] = field(default_factory=list)

    def check(self, claim: str, passed: bool, detail: str = "") -> bool:
        self.entries.append({
            "claim": claim,
            "status": "pass" if passed else "fail",
            "detail": detail,
        })
        return passed

    def skip(self, claim: str, detail: str) -> None:
        self.entries.append({"claim": claim, "status": "skipped", "detail": detail})

    @property
    def ok(self) -> bool:
        return all(e["status"] != "fail" for e in self.entries)

    def text(self) -> str:
        width = max((len(e["claim"]) for e in self.entries), default=0)
        lines = []
        for e in self.entries:
            status = e["status"].upper()
            line = f"[{status:>7}] {e['claim']:<{width}}"
            if e["detail"]:
                line += f"  ({e['detail']})"
            lines.append(line)
        return "\n".join(lines)


def _diagnostic(e: TopologyError) -> str:
    """Error message plus the witness data when the error carries one."""
    witness = getattr(e, "witness", None) or getattr(e, "cycle", None)
    return f"{e}; witness: {witness}" if witness is not None else str(e)


def _counts_checksum(image_counts) -> str:
    table = sorted([list(simplex), count] for simplex, count in image_counts.items())
    digest = hashlib.sha256(formats.dumps(table).encode("utf-8")).hexdigest()
    return f"sha256:{digest}"


def verify_pipeline(complex, coloring, orientation, max_cells: int,
                    matching_cap: int) -> tuple[Claims, dict]:
    """Run every check from raw complex to chain identity.

    Returns the claims ledger and the report body.  Stops at the first
    failed claim; later stages are simply absent from the ledger.
    """
    claims = Claims()
    report: dict = {
        "component_cells": None,
        "covering_degree": None,
        "q_component": None,
        "q_formula": None,
        "per_simplex_counts_checksum": None,
    }

    v = validate_pseudomanifold(complex)
    if not claims.check(
            "input is a closed connected pseudomanifold", v.ok, v.summary()):
        return claims, report

    subdivided = coloring is None
    if subdivided:
        sd = barycentric_subdivide(complex)
        complex, coloring = sd.complex, sd.coloring
        orientation = None
        claims.check("regular coloring obtained by barycentric subdivision",
                     True, f"{len(complex.top_simplices)} top simplices")
    else:
        if not claims.check("supplied coloring is regular",
                            check_regular_coloring(complex, coloring)):
            return claims, report

    try:
        orientation = orientation or orient(complex)
        claims.check("complex is orientable with coherent orientation", True)
    except TopologyError as e:
        claims.check("complex is orientable with coherent orientation",
                     False, _diagnostic(e))
        return claims, report

    try:
        bipartition(complex, coloring)
        claims.check("facet-dual graph is bipartite", True)
    except TopologyError as e:
        claims.check("facet-dual graph is bipartite", False, _diagnostic(e))
        return claims, report

    bundle = ColoredPseudomanifold(complex, coloring, orientation)
    n = bundle.n
    report["input"] = {
        "n": n,
        "top_simplices": bundle.top_count,
        "subdivided": subdivided,
    }

    base = build_tomei(n)
    base_euler = euler_characteristic(base)
    claims.check("Tomei base complex built",
                 base.num_cells == 1 << n,
                 f"2^{n} cells, euler characteristic {base_euler}")
    report["base"] = {"cells": base.num_cells, "euler": base_euler}

    ok = True
    for w in proper_subsets(n):
        try:
            canonical_involution(bundle, w)
        except TopologyError:
            ok = False
            break
    claims.check("canonical compatible involution exists for every color subset",
                 ok)
    if not ok:
        return claims, report

    counts = None
    try:
        counts = [(w, len(enumerate_compatible_involutions(bundle, w, matching_cap)))
                  for w in proper_subsets(n)]
        claims.check("compatible involutions counted for every color subset",
                     all(c for _, c in counts),
                     ", ".join(f"{mask_elements(w)}:{c}" for w, c in counts))
        q_formula = 1 << (n - 1)
        for _, c in counts:
            q_formula *= c
        report["q_formula"] = q_formula
        report["involution_counts"] = [[list(mask_elements(w)), c]
                                       for w, c in counts]
    except MatchingOverflowError as e:
        claims.skip("compatible involutions counted for every color subset",
                    str(e))

    # Build the full cover set when its size is known to fit the cap,
    # otherwise a single component.
    full_size = None
    if counts is not None:
        full_size = bundle.top_count * (1 << (n - 1)) * _product(
            c for _, c in counts)
    if full_size is not None and full_size <= max_cells:
        cover = build_full(bundle, max_cells, matching_cap)
        claims.check("full cover set built and closed under crossings", True,
                     f"{cover.num_cells} cells")
    else:
        try:
            cover = build_component(bundle, max_cells=max_cells)
            claims.check("cover component built and closed under crossings",
                         True, f"{cover.num_cells} cells")
        except CapExceededError as e:
            claims.check("cover component built and closed under crossings",
                         False, str(e))
            return claims, report
    report["component_cells"] = cover.num_cells

    try:
        covering = verify_covering(cover)
        claims.check("projection to the Tomei base is a covering",
                     True, f"degree {covering.degree}")
        report["covering_degree"] = covering.degree
    except TopologyError as e:
        claims.check("projection to the Tomei base is a covering", False, str(e))
        return claims, report

    classes = face_classes(cover.pc)
    tri = triangulate(cover.pc, classes)
    tv = validate_pseudomanifold(tri.complex)
    closed = not tv.boundary_faces and not tv.overused_faces
    claims.check("cover triangulation is a closed pseudomanifold in every "
                 "component", closed,
                 f"{len(tri.complex.top_simplices)} top simplices")
    if not closed:
        return claims, report

    cover_euler = euler_characteristic(cover.pc, classes)
    claims.check("euler characteristic is multiplicative",
                 cover_euler == covering.degree * base_euler,
                 f"{cover_euler} = {covering.degree} * {base_euler}")

    if n == 2:
        surf = verify_surface(tri)
        if not claims.check("cover is a closed surface", surf.ok):
            return claims, report

    try:
        claims.check("cover is orientable", orientable(cover.pc, tri))
    except TopologyError as e:
        claims.check("cover is orientable", False, str(e))
        return claims, report

    try:
        rmap = realization_map(cover, classes, tri)
        claims.check("realization map is well defined on face classes", True,
                     f"{len(classes.members)} classes checked")
    except TopologyError as e:
        claims.check("realization map is well defined on face classes",
                     False, str(e))
        return claims, report

    try:
        real = verify_realization(rmap)
        claims.check("pushforward of the fundamental cycle is a constant "
                     "positive multiple of the subdivided base cycle", True,
                     f"degree {real.degree} over "
                     f"{len(real.image_counts)} base flags")
        report["q_component"] = real.degree
        report["per_simplex_counts_checksum"] = _counts_checksum(real.image_counts)
        report["realization"] = {
            "degree": real.degree,
            "component_degrees": real.component_degrees,
            "degenerate_flags": real.degenerate_flags,
            "nondegenerate_flags": real.nondegenerate_flags,
        }
    except TopologyError as e:
        claims.check("pushforward of the fundamental cycle is a constant "
                     "positive multiple of the subdivided base cycle",
                     False, str(e))
        return claims, report

    fibers: dict[int, int] = {}
    for c in cover.cells:
        fibers[c.sigma] = fibers.get(c.sigma, 0) + 1
    claims.check("realization degree equals the cell fiber over every base "
                 "simplex", set(fibers.values()) == {real.degree},
                 f"fiber {real.degree} over {bundle.top_count} simplices")

    if full_size is not None and cover.num_cells == full_size:
        claims.check("cover is the full cover set and realizes the predicted "
                     "multiplicity 2^(n-1) * prod |P_w|",
                     real.degree == report["q_formula"],
                     f"{real.degree} = {report['q_formula']}")

    return claims, report


def _product(values) -> int:
    out = 1
    for v in values:
        out *= v
    return out


# ---------------------------------------------------------------------------
# subcommands

def _load(config: RunConfig):
    if not config.input:
        raise ValueError(f"mode {config.mode!r} requires --input")
    return formats.load_complex(config.input)


def _run_validate(config: RunConfig) -> int:
    complex, coloring, _ = _load(config)
    report = validate_pseudomanifold(complex)
    print(report.summary())
    coloring_ok = True
    if coloring is not None:
        coloring_ok = check_regular_coloring(complex, coloring)
        print(f"coloring: {'regular' if coloring_ok else 'NOT regular'}")
    if config.out:
        formats.write_json({
            "ok": report.ok and coloring_ok,
            "connected": report.connected,
            "boundary_faces": [list(f) for f in report.boundary_faces],
            "overused_faces": [[list(f), k] for f, k in report.overused_faces],
            "coloring_regular": coloring_ok if coloring is not None else None,
        }, config.out)
    return 0 if report.ok and coloring_ok else 1


def _run_subdivide(config: RunConfig) -> int:
    complex, _, _ = _load(config)
    if not config.out:
        raise ValueError("subdivide requires --out")
    sd = barycentric_subdivide(complex)
    formats.write_json(
        formats.complex_to_dict(sd.complex, coloring=sd.coloring), config.out)
    print(f"subdivision: {sd.complex.num_vertices} vertices, "
          f"{len(sd.complex.top_simplices)} top simplices -> {config.out}")
    return 0


def _run_tomei(config: RunConfig) -> int:
    if config.n is None:
        raise ValueError("tomei requires --n")
    pc = build_tomei(config.n)
    classes = face_classes(pc)
    chi = euler_characteristic(pc, classes)
    tri = triangulate(pc, classes)
    report = validate_pseudomanifold(tri.complex)
    is_orientable = True
    try:
        orient(tri.complex)
    except TopologyError:
        is_orientable = False
    checks = report.ok and is_orientable
    print(f"Tomei n={config.n}: {pc.num_cells} cells, "
          f"face classes {classes.counts_by_codim()}, euler {chi}")
    print(f"triangulation: {len(tri.complex.top_simplices)} top simplices, "
          f"{'valid' if report.ok else 'INVALID'}, "
          f"{'orientable' if is_orientable else 'NOT orientable'}")
    if config.n == 2:
        surf = verify_surface(tri)
        checks = checks and surf.ok
        print(f"surface checks: {'pass' if surf.ok else 'FAIL'}")
    if config.out:
        # color = face dimension + 1, as in barycentric subdivisions
        coloring = [config.n + 1 - len(classes.chain_of_class[v])
                    for v in range(len(classes.members))]
        formats.write_json(
            formats.complex_to_dict(tri.complex, coloring=coloring), config.out)
    if config.cells_out:
        formats.write_json(formats.cell_complex_to_dict(pc), config.cells_out)
    return 0 if checks else 1


def _run_cover(config: RunConfig) -> int:
    complex, coloring, orientation = _load(config)
    if coloring is None:
        sd = barycentric_subdivide(complex)
        complex, coloring, orientation = sd.complex, sd.coloring, None
    bundle = ColoredPseudomanifold(complex, coloring, orientation)
    cover = (build_full(bundle, config.max_cells, config.matching_cap)
             if config.full
             else build_component(bundle, max_cells=config.max_cells))
    covering = verify_covering(cover)
    print(f"cover: {cover.num_cells} cells, covering degree {covering.degree}")
    if config.out:
        formats.write_json(formats.cover_to_dict(cover), config.out)
    if config.cells_out:
        tri = triangulate(cover.pc)
        formats.write_json(formats.complex_to_dict(tri.complex), config.cells_out)
    return 0


def _run_homology(config: RunConfig) -> int:
    complex, _, _ = _load(config)
    groups = homology(complex)
    for k, g in enumerate(groups):
        print(f"H_{k} = {g}")
    if config.out:
        formats.write_json({
            "groups": [{"betti": g.betti, "torsion": g.torsion} for g in groups],
        }, config.out)
    return 0


def _run_verify(config: RunConfig, write_text: bool) -> int:
    complex, coloring, orientation = _load(config)
    claims, report = verify_pipeline(complex, coloring, orientation,
                                     config.max_cells, config.matching_cap)
    report["claims"] = claims.entries
    report["ok"] = claims.ok
    text = claims.text() + "\n" + (
        f"overall: {'PASS' if claims.ok else 'FAIL'}\n")
    print(text, end="")
    if config.out:
        formats.write_json(report, config.out)
        if write_text:
            Path(config.out).with_suffix(".txt").write_text(
                text, encoding="utf-8")
    return 0 if claims.ok else 1


def run(config: RunConfig) -> int:
    handlers = {
        "validate": _run_validate,
        "subdivide": _run_subdivide,
        "tomei": _run_tomei,
        "cover": _run_cover,
        "homology": _run_homology,
    }
    if config.mode == "verify":
        return _run_verify(config, write_text=False)
    if config.mode == "report":
        if not config.out:
            raise ValueError("report requires --out")
        return _run_verify(config, write_text=True)
    if config.mode not in handlers:
        raise ValueError(f"unknown mode {config.mode!r}")
    return handlers[config.mode](config)


# ---------------------------------------------------------------------------
# argument parsing

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclecover",
        description="verify realization of cycles by covers of Tomei manifolds")
    sub = parser.add_subparsers(dest="mode", required=True)

    def add_common(p, needs_input=True):
        if needs_input:
            p.add_argument("--input", "-i", required=True,
                           help="input complex JSON")
        p.add_argument("--out", "-o", help="output JSON path")
        p.add_argument("--max-cells", type=int, default=None,
                       help=f"cell cap (default {MAX_CELLS_ENV} or "
                            f"{DEFAULT_MAX_CELLS})")
        p.add_argument("--matching-cap", type=int,
                       default=DEFAULT_MATCHING_CAP,
                       help="top-simplex cap for involution enumeration")

    add_common(sub.add_parser("validate", help="pseudomanifold checks"))
    add_common(sub.add_parser("subdivide", help="barycentric subdivision"))
    tomei = sub.add_parser("tomei", help="build and check a Tomei manifold")
    tomei.add_argument("--n", type=int, required=True)
    add_common(tomei, needs_input=False)
    tomei.add_argument("--cells-out", help="cell-complex JSON path")
    cover = sub.add_parser("cover", help="build a covering cell complex")
    add_common(cover)
    cover.add_argument("--full", action="store_true",
                       help="build the full cover set instead of one component")
    cover.add_argument("--cells-out",
                       help="triangulated complex JSON path")
    add_common(sub.add_parser("homology", help="integral homology groups"))
    add_common(sub.add_parser("verify", help="run the whole verification chain"))
    add_common(sub.add_parser("report", help="verify and write JSON + text reports"))
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        max_cells = (args.max_cells if getattr(args, "max_cells", None)
                     else default_max_cells())
        config = RunConfig(
            mode=args.mode,
            input=getattr(args, "input", None),
            n=getattr(args, "n", None),
            out=args.out,
            cells_out=getattr(args, "cells_out", None),
            full=getattr(args, "full", False),
            max_cells=max_cells,
            matching_cap=args.matching_cap,
        )
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    try:
        return run(config)
    except (OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except TopologyError as e:
        print(f"check failed: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
