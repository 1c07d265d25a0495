"""Independent quadrature oracle for the transplanted Rayleigh coefficients.

The closed-form coefficient formulas in `trieig.lambda2` are long enough that
transcription typos are a real risk.  This module recomputes the six defining
integrals directly: the reference eigenfunctions are transplanted through the
family's affine map, the integrals are pulled back to the reference triangle
(constant Jacobian), and integrated with a tensor Gauss rule on a collapsed
square.  Everything here is plain float64 - it is an oracle for testing, not
part of the certified path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .lambda2 import Family

SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class TransplantFamily:
    """Reference data: vertices, eigenfunction modes, map to the reference."""

    family: Family
    ref_vertices: tuple
    # eigenfunctions as lists of (a, b, sign) modes; see _phi_* for the basis
    modes_1: tuple
    modes_2: tuple
    ref_eigenvalues: tuple  # multiples of pi^2


FAMILY_30 = TransplantFamily(
    family=Family.T30,
    ref_vertices=((0.0, 0.0), (0.5, 0.0), (0.5, SQRT3 / 2)),
    modes_1=((4, 2, 1.0), (5, 1, -1.0), (1, 3, -1.0)),
    modes_2=((5, 3, 1.0), (2, 4, -1.0), (7, 1, -1.0)),
    ref_eigenvalues=(112.0 / 9.0, 208.0 / 9.0),
)

FAMILY_45 = TransplantFamily(
    family=Family.T45,
    ref_vertices=((0.0, 0.0), (1.0, 0.0), (0.0, 1.0)),
    modes_1=((2, 1, 1.0), (1, 2, 1.0)),
    modes_2=((3, 1, 1.0), (1, 3, -1.0)),
    ref_eigenvalues=(5.0, 10.0),
)

FAMILIES = {Family.T30: FAMILY_30, Family.T45: FAMILY_45}


def mode_eigenvalue(family: Family, mode) -> float:
    """Eigenvalue (as a multiple of pi^2) of one sin-product mode."""
    a, b, _ = mode
    if family is Family.T30:
        # phases z = (pi/3)(2x - 1), t = pi(1 - 2y/sqrt(3))
        return (4.0 / 9.0) * (a * a + 3.0 * b * b)
    return float(a * a + b * b)


def _phi_30(modes, x, y, grad=False):
    z = (np.pi / 3.0) * (2.0 * x - 1.0)
    t = np.pi * (1.0 - 2.0 * y / SQRT3)
    dz = 2.0 * np.pi / 3.0
    dt = -2.0 * np.pi / SQRT3
    val = 0.0
    gx = 0.0
    gy = 0.0
    for a, b, s in modes:
        val = val + s * np.sin(a * z) * np.sin(b * t)
        if grad:
            gx = gx + s * a * dz * np.cos(a * z) * np.sin(b * t)
            gy = gy + s * b * dt * np.sin(a * z) * np.cos(b * t)
    return (val, gx, gy) if grad else val


def _phi_45(modes, x, y, grad=False):
    val = 0.0
    gx = 0.0
    gy = 0.0
    for a, b, s in modes:
        val = val + s * np.sin(a * np.pi * x) * np.sin(b * np.pi * y)
        if grad:
            gx = gx + s * a * np.pi * np.cos(a * np.pi * x) * np.sin(b * np.pi * y)
            gy = gy + s * b * np.pi * np.sin(a * np.pi * x) * np.cos(b * np.pi * y)
    return (val, gx, gy) if grad else val


def eigenfunction(family: Family, which: int, x, y, grad=False):
    fam = FAMILIES[family]
    modes = fam.modes_1 if which == 1 else fam.modes_2
    fn = _phi_30 if family is Family.T30 else _phi_45
    return fn(modes, x, y, grad)


def affine_map(family: Family, p: float, q: float):
    """Matrix M and offset b of the map L(x) = Mx + b sending the target
    triangle (0,0),(1,0),(p,q) onto the family's reference triangle."""
    if family is Family.T30:
        b = np.array([0.5, SQRT3 / 2])
        col1 = np.array([-0.5, -SQRT3 / 2])
        col2 = np.array([p / (2 * q), SQRT3 * (p - 1) / (2 * q)])
    else:
        b = np.array([1.0, 0.0])
        col1 = np.array([-1.0, 1.0])
        col2 = np.array([(p - 1) / q, -p / q])
    return np.column_stack([col1, col2]), b


def _duffy_nodes(ref_vertices, order: int):
    """Tensor Gauss nodes mapped onto the reference triangle."""
    g, w = np.polynomial.legendre.leggauss(order)
    u = 0.5 * (g + 1.0)
    wu = 0.5 * w
    U, V = np.meshgrid(u, u, indexing="ij")
    WU, WV = np.meshgrid(wu, wu, indexing="ij")
    v0, v1, v2 = (np.asarray(v) for v in ref_vertices)
    pts = ((1.0 - U)[..., None] * v0
           + (U * (1.0 - V))[..., None] * v1
           + (U * V)[..., None] * v2)
    area = 0.5 * abs((v1[0] - v0[0]) * (v2[1] - v0[1])
                     - (v2[0] - v0[0]) * (v1[1] - v0[1]))
    weights = WU * WV * (2.0 * area * U)
    return pts[..., 0], pts[..., 1], weights


def coefficients_by_quadrature(family: Family, p: float, q: float,
                               order: int = 48) -> dict:
    """The six integrals A..F over the target triangle, by pullback quadrature."""
    fam = FAMILIES[family]
    M, _ = affine_map(family, p, q)
    det = abs(np.linalg.det(M))
    X, Y, W = _duffy_nodes(fam.ref_vertices, order)
    f1, g1x, g1y = eigenfunction(family, 1, X, Y, grad=True)
    f2, g2x, g2y = eigenfunction(family, 2, X, Y, grad=True)
    # grad of (phi o L) is M^T grad(phi); energies carry M M^T
    mmt = M @ M.T
    def energy(ax, ay, bx, by):
        gxx = mmt[0, 0] * ax + mmt[0, 1] * ay
        gyy = mmt[1, 0] * ax + mmt[1, 1] * ay
        return float(np.sum(W * (gxx * bx + gyy * by)) / det)
    def mass(fa, fb):
        return float(np.sum(W * fa * fb) / det)
    return {
        "A": energy(g1x, g1y, g1x, g1y),
        "B": energy(g1x, g1y, g2x, g2y),
        "C": energy(g2x, g2y, g2x, g2y),
        "D": mass(f1, f1),
        "E": mass(f1, f2),
        "F": mass(f2, f2),
    }


def boundary_samples(family: Family, n: int = 64):
    """Points on the reference triangle boundary, for vanishing checks."""
    v = np.asarray(FAMILIES[family].ref_vertices)
    ts = np.linspace(0.0, 1.0, n)
    pts = []
    for i in range(3):
        a, b = v[i], v[(i + 1) % 3]
        pts.append(a[None, :] * (1 - ts)[:, None] + b[None, :] * ts[:, None])
    return np.concatenate(pts, axis=0)
