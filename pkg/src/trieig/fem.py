"""Non-rigorous finite-element eigenvalue oracle (P1, uniform refinement).

Conforming piecewise-linear elements on nested uniform refinements of one
triangle.  Discrete eigenvalues approach the continuum ones from above, which
makes them a clean one-sided cross-check for the certified lower bounds.
Richardson h^2-extrapolation over two consecutive levels removes the leading
discretization error.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg
import scipy.sparse as sparse
import scipy.sparse.linalg as splinalg

from .geometry import DegenerateTriangleError, TriangleParam

MAX_LEVEL = 9
RESIDUAL_TOL = 1e-10
_DENSE_CUTOFF = 400


class MeshTooCoarse(ValueError):
    pass


@dataclass(frozen=True)
class Mesh:
    vertices: np.ndarray        # (nv, 2)
    elements: np.ndarray        # (nt, 3) CCW index triples
    boundary: np.ndarray        # (nv,) bool
    level: int

    @property
    def interior(self) -> np.ndarray:
        return ~self.boundary


@dataclass(frozen=True)
class Spectrum:
    lam1: float
    lam2: float
    level: int
    extrapolated: tuple | None = None

    @property
    def ratio(self) -> float:
        return self.lam2 / self.lam1


def build_mesh(t: TriangleParam, level: int) -> Mesh:
    """Uniform level-L refinement: 4^L elements, (2^L+1)(2^L+2)/2 vertices."""
    if level > MAX_LEVEL:
        raise ValueError(f"refinement level above {MAX_LEVEL}")
    p, q = t.as_floats()
    if q <= 0:
        raise DegenerateTriangleError("degenerate triangle")
    n = 2 ** level
    corners = np.array([[0.0, 0.0], [1.0, 0.0], [p, q]])
    idx = {}
    verts = []
    for i in range(n + 1):
        for j in range(n + 1 - i):
            idx[(i, j)] = len(verts)
            verts.append(corners[0]
                         + (i / n) * (corners[1] - corners[0])
                         + (j / n) * (corners[2] - corners[0]))
    tris = []
    for i in range(n):
        for j in range(n - i):
            tris.append([idx[(i, j)], idx[(i + 1, j)], idx[(i, j + 1)]])
            if i + j < n - 1:
                tris.append([idx[(i + 1, j)], idx[(i + 1, j + 1)], idx[(i, j + 1)]])
    boundary = np.zeros(len(verts), dtype=bool)
    for (i, j), k in idx.items():
        if i == 0 or j == 0 or i + j == n:
            boundary[k] = True
    return Mesh(vertices=np.asarray(verts), elements=np.asarray(tris, dtype=np.int64),
                boundary=boundary, level=level)


def assemble(mesh: Mesh):
    """Stiffness and mass matrices restricted to interior vertices."""
    if not mesh.interior.any():
        raise MeshTooCoarse("mesh too coarse: no interior vertex")
    K, M = assemble_full(mesh)
    ii = np.flatnonzero(mesh.interior)
    return K[np.ix_(ii, ii)].tocsc(), M[np.ix_(ii, ii)].tocsc()


def assemble_full(mesh: Mesh):
    """Stiffness and mass over all vertices (boundary rows included)."""
    pts, tris = mesh.vertices, mesh.elements
    x = pts[tris][:, :, 0]
    y = pts[tris][:, :, 1]
    x1, x2, x3 = x.T
    y1, y2, y3 = y.T
    area = 0.5 * ((x2 - x1) * (y3 - y1) - (x3 - x1) * (y2 - y1))
    b = np.stack([y2 - y3, y3 - y1, y1 - y2], axis=1)
    c = np.stack([x3 - x2, x1 - x3, x2 - x1], axis=1)
    k_loc = (np.einsum("ei,ej->eij", b, b) + np.einsum("ei,ej->eij", c, c)) \
        / (4.0 * area[:, None, None])
    m_loc = area[:, None, None] * ((np.ones((3, 3)) + np.eye(3)) / 12.0)[None]
    rows = np.repeat(tris, 3, axis=1).ravel()
    cols = np.tile(tris, (1, 3)).ravel()
    n = len(pts)
    K = sparse.coo_matrix((k_loc.ravel(), (rows, cols)), shape=(n, n)).tocsr()
    M = sparse.coo_matrix((m_loc.ravel(), (rows, cols)), shape=(n, n)).tocsr()
    return K, M


def _residual(K, M, lam, x) -> float:
    r = K @ x - lam * (M @ x)
    return float(np.linalg.norm(r) / (abs(lam) * np.linalg.norm(x)))


def smallest_two(mesh: Mesh) -> Spectrum:
    """Two smallest generalized eigenvalues of (K, M) on interior vertices."""
    K, M = assemble(mesh)
    n = K.shape[0]
    if n < 2:
        raise MeshTooCoarse("mesh too coarse: need at least 2 interior vertices")
    if n <= _DENSE_CUTOFF:
        vals, vecs = scipy.linalg.eigh(K.toarray(), M.toarray(),
                                       subset_by_index=[0, 1])
    else:
        vals, vecs = splinalg.eigsh(K, k=2, M=M, sigma=0.0, which="LM")
        order = np.argsort(vals)
        vals, vecs = vals[order], vecs[:, order]
    for i in range(2):
        lam, x = vals[i], vecs[:, i]
        if _residual(K, M, lam, x) > RESIDUAL_TOL:
            # polish by shifted inverse iteration
            shift = lam * (1.0 - 1e-6)
            solve = splinalg.splu((K - shift * M).tocsc())
            for _ in range(3):
                x = solve.solve(M @ x)
                x /= np.linalg.norm(x)
                lam = float(x @ (K @ x)) / float(x @ (M @ x))
                if _residual(K, M, lam, x) <= RESIDUAL_TOL:
                    break
            else:
                raise RuntimeError(
                    f"eigensolver residual {_residual(K, M, lam, x):.2e} "
                    f"above {RESIDUAL_TOL}")
            vals[i], vecs[:, i] = lam, x
    return Spectrum(lam1=float(vals[0]), lam2=float(vals[1]), level=mesh.level)


def smallest_two_at(t: TriangleParam, level: int) -> Spectrum:
    return smallest_two(build_mesh(t, level))


def extrapolate(levels: list) -> Spectrum:
    """Richardson h^2 extrapolation from the last two consecutive levels."""
    if len(levels) < 2:
        raise ValueError("need at least two levels")
    levels = sorted(levels, key=lambda s: s.level)
    prev, last = levels[-2], levels[-1]
    if last.level != prev.level + 1:
        raise ValueError("levels must be consecutive")
    if not (last.lam1 <= prev.lam1 and last.lam2 <= prev.lam2):
        import warnings
        warnings.warn("non-monotone eigenvalue sequence; extrapolation skipped")
        return last
    lam1 = last.lam1 + (last.lam1 - prev.lam1) / 3.0
    lam2 = last.lam2 + (last.lam2 - prev.lam2) / 3.0
    return Spectrum(lam1=last.lam1, lam2=last.lam2, level=last.level,
                    extrapolated=(lam1, lam2))


def oracle(t: TriangleParam, level: int, extrapolate_pair: bool = True) -> Spectrum:
    """Spectrum at `level`, extrapolated from (level-1, level) when requested."""
    if extrapolate_pair and level >= 1:
        s_prev = smallest_two_at(t, level - 1)
        s_last = smallest_two_at(t, level)
        return extrapolate([s_prev, s_last])
    return smallest_two_at(t, level)
