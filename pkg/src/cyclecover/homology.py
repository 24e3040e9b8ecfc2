"""Integral simplicial homology via Smith normal form.

Boundary matrices are exact integer matrices (numpy arrays of Python ints,
so no overflow is possible), and the Smith reduction keeps its row and
column transforms so the factorization U M V = D can be checked by
multiplication instead of trusted.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .pseudomanifold import AbstractComplex, Simplex, orient


def _identity(k: int) -> np.ndarray:
    m = np.zeros((k, k), dtype=object)
    for i in range(k):
        m[i, i] = 1
    return m


@dataclass
class SmithForm:
    """Diagonal form D with unimodular transforms: U @ matrix @ V == D."""

    d: np.ndarray
    u: np.ndarray
    v: np.ndarray

    @property
    def rank(self) -> int:
        return sum(1 for i in range(min(self.d.shape)) if self.d[i, i])

    @property
    def divisors(self) -> list[int]:
        return [self.d[i, i] for i in range(min(self.d.shape)) if self.d[i, i]]


def smith_normal_form(matrix, verify: bool = True) -> SmithForm:
    """Reduce an integer matrix to Smith normal form.

    Pivots are chosen with minimal absolute value for stability of entry
    growth; at every step the pivot is made to divide the whole remaining
    submatrix, so the diagonal divisibility chain holds by construction.
    With ``verify`` the factorization is recomputed by multiplication.
    """
    m = np.array(matrix, dtype=object)
    if m.ndim != 2:
        raise ValueError("need a 2-dimensional matrix")
    rows, cols = m.shape
    a = m.copy()
    u = _identity(rows)
    v = _identity(cols)

    for t in range(min(rows, cols)):
        while True:
            pivot = None
            for i in range(t, rows):
                for j in range(t, cols):
                    x = a[i, j]
                    if x and (pivot is None or abs(x) < abs(a[pivot[0], pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break
            pi, pj = pivot
            if pi != t:
                a[[t, pi], :] = a[[pi, t], :]
                u[[t, pi], :] = u[[pi, t], :]
            if pj != t:
                a[:, [t, pj]] = a[:, [pj, t]]
                v[:, [t, pj]] = v[:, [pj, t]]
            if a[t, t] < 0:
                a[t, :] = -a[t, :]
                u[t, :] = -u[t, :]

            for i in range(t + 1, rows):
                q = a[i, t] // a[t, t]
                if q:
                    a[i, :] -= q * a[t, :]
                    u[i, :] -= q * u[t, :]
            if any(a[i, t] for i in range(t + 1, rows)):
                continue  # remainders are smaller: pick a new pivot
            for j in range(t + 1, cols):
                q = a[t, j] // a[t, t]
                if q:
                    a[:, j] -= q * a[:, t]
                    v[:, j] -= q * v[:, t]
            if any(a[t, j] for j in range(t + 1, cols)):
                continue
            offender = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if a[i, j] % a[t, t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            a[t, :] += a[offender, :]
            u[t, :] += u[offender, :]
        if a[t, t] == 0:
            break

    result = SmithForm(a, u, v)
    if verify:
        if not np.array_equal(u @ m @ v, a):
            raise AssertionError("Smith transform verification failed")
        divisors = result.divisors
        for small, large in zip(divisors, divisors[1:]):
            if large % small:
                raise AssertionError("Smith divisibility chain broken")
    return result


# ---------------------------------------------------------------------------
# chain complexes of abstract simplicial complexes

def faces_by_dimension(c: AbstractComplex) -> list[list[Simplex]]:
    by_dim: list[list[Simplex]] = [[] for _ in range(c.n + 1)]
    for f in c.all_faces():
        by_dim[len(f) - 1].append(f)
    return by_dim


def boundary_matrices(c: AbstractComplex) -> list[np.ndarray]:
    """Signed boundary matrices: entry k maps k-chains to (k-1)-chains.
    Index 0 holds the empty map.  The composites of consecutive matrices
    are checked to vanish."""
    faces = faces_by_dimension(c)
    index = [{f: i for i, f in enumerate(level)} for level in faces]
    mats: list[np.ndarray] = [np.zeros((0, len(faces[0])), dtype=object)]
    for k in range(1, c.n + 1):
        m = np.zeros((len(faces[k - 1]), len(faces[k])), dtype=object)
        for j, f in enumerate(faces[k]):
            for i in range(len(f)):
                m[index[k - 1][f[:i] + f[i + 1:]], j] = (-1) ** i
        mats.append(m)
    for k in range(2, c.n + 1):
        if np.count_nonzero(mats[k - 1] @ mats[k]):
            raise AssertionError(f"boundary composite at dimension {k} is nonzero")
    return mats


@dataclass
class HomologyGroup:
    betti: int
    torsion: list[int]

    def __str__(self) -> str:
        parts = ["Z"] * self.betti + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"

    def __eq__(self, other) -> bool:
        if isinstance(other, HomologyGroup):
            return (self.betti, self.torsion) == (other.betti, other.torsion)
        return NotImplemented


def homology(c: AbstractComplex, verify: bool = True) -> list[HomologyGroup]:
    """Integral homology groups in dimensions 0..n."""
    faces = faces_by_dimension(c)
    mats = boundary_matrices(c)
    forms = [smith_normal_form(m, verify) for m in mats]
    groups = []
    for k in range(c.n + 1):
        rank_in = forms[k].rank
        rank_out = forms[k + 1].rank if k < c.n else 0
        torsion = [d for d in forms[k + 1].divisors if d > 1] if k < c.n else []
        groups.append(HomologyGroup(len(faces[k]) - rank_in - rank_out, torsion))
    return groups


def betti_numbers(c: AbstractComplex, verify: bool = True) -> list[int]:
    return [g.betti for g in homology(c, verify)]


def fundamental_class(c: AbstractComplex,
                      orientation: list[int] | None = None) -> np.ndarray:
    """The coherent top-dimensional cycle as a coefficient vector over the
    sorted top simplices.  Its boundary is checked to vanish."""
    if orientation is None:
        orientation = orient(c)
    top_faces = faces_by_dimension(c)[c.n]
    if list(top_faces) != list(c.top_simplices):
        raise AssertionError("top face order diverged from stored order")
    z = np.array(orientation, dtype=object)
    if c.n:
        if np.count_nonzero(boundary_matrices(c)[c.n] @ z):
            raise AssertionError("fundamental chain has nonzero boundary")
    return z
