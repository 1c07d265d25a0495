"""Certified Dirichlet-Laplacian eigenvalue bounds on triangles.

Certified lower bounds on the first eigenvalue and upper bounds on the second
eigenvalue of the Dirichlet Laplacian on a triangle, a machine-checked replay
of the four-area proof that lambda2/lambda1 <= 7/3 for right and obtuse
triangles, an independent interval branch-and-bound verification of the same
inequality, and a (non-rigorous) finite-element eigenvalue oracle for
cross-checks.
"""

__version__ = "0.1.0"
