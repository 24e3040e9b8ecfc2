"""Face lattice of the n-dimensional permutahedron.

Facets correspond to the nonempty proper subsets of {1, ..., n+1}; a face of
codimension k corresponds to a strictly increasing chain of k such subsets,
since two facets meet exactly when their subsets are nested.  The polytope
itself is the empty chain.  Subsets are bitmasks (bit c-1 for color c) and
chains are tuples of masks ordered by inclusion.

Everything downstream leans on this correspondence: vertices are complete
chains (orderings of {1, ..., n+1}), and the k-th barycentric triangulation
simplex of a cell is a flag of chains growing one subset at a time.
"""

from __future__ import annotations

from itertools import permutations

Chain = tuple[int, ...]


def full_mask(n: int) -> int:
    return (1 << (n + 1)) - 1


def mask_elements(mask: int) -> tuple[int, ...]:
    """Colors present in a mask, ascending (1-based)."""
    return tuple(c + 1 for c in range(mask.bit_length()) if mask >> c & 1)


def mask_of(colors) -> int:
    m = 0
    for c in colors:
        m |= 1 << (c - 1)
    return m


def proper_subsets(n: int) -> list[int]:
    """The 2^(n+1) - 2 facet labels, sorted by size then lexicographically
    by element tuple.  This order fixes tuple slots and traversal order."""
    subsets = [m for m in range(1, full_mask(n))]
    subsets.sort(key=lambda m: (m.bit_count(), mask_elements(m)))
    return subsets


def facets_intersect(a: int, b: int) -> bool:
    """Two facets of the permutahedron meet iff their subsets are nested."""
    common = a & b
    return common == a or common == b


def is_chain(masks) -> bool:
    return all(a != b and a & b == a for a, b in zip(masks, masks[1:]))


def enumerate_faces(n: int, codim: int) -> list[Chain]:
    """All codimension-``codim`` faces as chains of ``codim`` nested subsets,
    in lexicographic order with respect to ``proper_subsets``."""
    if codim == 0:
        return [()]
    subsets = proper_subsets(n)
    out: list[Chain] = []

    def grow(chain: Chain):
        if len(chain) == codim:
            out.append(chain)
            return
        last = chain[-1] if chain else 0
        for m in subsets:
            if m != last and (m & last) == last:
                grow(chain + (m,))

    grow(())
    return out


def face_codim(chain: Chain) -> int:
    return len(chain)


def contained_faces(chain: Chain, n: int) -> list[Chain]:
    """Faces of the given face: superchains obtained by inserting one more
    nested subset (one codimension deeper)."""
    subsets = proper_subsets(n)
    present = set(chain)
    out = []
    for m in subsets:
        if m in present:
            continue
        extended = tuple(sorted(chain + (m,), key=lambda x: (x.bit_count(), mask_elements(x))))
        if is_chain(extended):
            out.append(extended)
    return out


def containing_faces(chain: Chain) -> list[Chain]:
    """Faces this face lies in: subchains dropping one subset."""
    return [chain[:i] + chain[i + 1:] for i in range(len(chain))]


def vertex_chains(n: int) -> list[Chain]:
    """Complete chains (codimension n); one per ordering of {1, ..., n+1}
    with the last element dropped."""
    return enumerate_faces(n, n)


def chain_as_order(chain: Chain, n: int) -> tuple[int, ...]:
    """Read a complete chain as the ordering of colors it adds."""
    order = []
    prev = 0
    for m in chain + (full_mask(n),):
        added = mask_elements(m & ~prev)
        order.extend(added)
        prev = m
    return tuple(order)


def face_counts(n: int) -> list[int]:
    """Number of codimension-k faces for k = 0..n."""
    return [len(enumerate_faces(n, k)) for k in range(n + 1)]


# ---------------------------------------------------------------------------
# barycentric triangulation of a single permutahedron

def triangulation_flags(n: int) -> list[tuple[Chain, ...]]:
    """Top simplices of the barycentric triangulation, one per flag of faces.

    A flag is a sequence of chains () = c_0 < c_1 < ... < c_n where each step
    inserts one subset; equivalently a complete chain together with the order
    of insertion of its subsets.  There are n! * (n+1)! flags.
    """
    flags = []
    for complete in vertex_chains(n):
        for insert_order in permutations(range(n)):
            chains: list[Chain] = [()]
            held: list[int] = []
            for pos in insert_order:
                held.append(complete[pos])
                held.sort(key=lambda m: (m.bit_count(), mask_elements(m)))
                chains.append(tuple(held))
            flags.append(tuple(chains))
    return flags


def barycentric_triangulation(n: int):
    """Triangulate one permutahedron: vertices are its faces (chains,
    including the empty chain for the whole cell), top simplices are flags.

    Returns (complex, chain_ids) with chains indexed by (codim, chain) order.
    """
    from .pseudomanifold import AbstractComplex

    chains: list[Chain] = []
    for k in range(n + 1):
        chains.extend(enumerate_faces(n, k))
    chain_ids = {c: i for i, c in enumerate(chains)}
    tops = [tuple(sorted(chain_ids[c] for c in flag)) for flag in triangulation_flags(n)]
    return AbstractComplex(n, len(chains), tops), chain_ids
