"""The Cayley map, its inverse, and image-membership diagnostics.

``cayley`` carries skew-Hermitian matrices to unitary matrices that avoid
eigenvalue -1; on a tangent matrix of one of the supported families the
image additionally lands in the embedded copy of the symmetric space,
which :func:`verify_image` checks numerically.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import antitranspose, as_matrix, det, leading_signature, max_abs
from .spaces import SpaceSpec, involution_apply


def cayley(X) -> np.ndarray:
    """``(1 - X) (1 + X)^{-1}`` via a linear solve.

    For skew-Hermitian ``X`` the factor ``1 + X`` is always invertible
    (the spectrum is purely imaginary) and the result is unitary.  The two
    factors commute, so solving from the left is equivalent.
    """
    X = as_matrix(X)
    n = X.shape[0]
    eye = np.eye(n, dtype=complex)
    try:
        g = np.linalg.solve(eye + X, eye - X)
    except np.linalg.LinAlgError as exc:
        raise ValueError("1 + X is numerically singular; input is not skew-Hermitian") from exc
    return g


def cayley_inverse(g) -> np.ndarray:
    """Invert the Cayley map: ``g -> (1 - g)(1 + g)^{-1}``.

    Requires -1 outside the spectrum of ``g``; a vanishing ``det(1 + g)``
    raises ``ValueError``.
    """
    g = as_matrix(g)
    n = g.shape[0]
    eye = np.eye(n, dtype=complex)
    scale = max(1.0, max_abs(eye + g))
    if abs(det(eye + g)) <= 1e-12 * scale**n:
        raise ValueError("-1 in spectrum: det(1 + g) vanishes, Cayley inverse undefined")
    return np.linalg.solve(eye + g, eye - g)


@dataclass
class ImageReport:
    """Deviations of a point from the embedded symmetric space."""

    violations: dict[str, float]
    tolerance: float

    @property
    def ok(self) -> bool:
        return all(v <= self.tolerance for v in self.violations.values())

    def worst(self) -> tuple[str, float]:
        name = max(self.violations, key=self.violations.get)
        return name, self.violations[name]


def verify_image(spec: SpaceSpec, g, tol: float = 1e-9) -> ImageReport:
    """Check ``g`` against the defining equations of the embedded space.

    Reported violations: unitarity ``g* g = 1``, compatibility of the
    involution with inversion, ``det g = 1``, and the orthogonal or
    symplectic reflection condition where the family has one.
    """
    g = as_matrix(g)
    N = spec.ambient
    if g.shape != (N, N):
        raise ValueError(f"matrix has shape {g.shape}, ambient size is {N}")
    eye = np.eye(N, dtype=complex)
    ginv = np.linalg.inv(g)
    v = {
        "unitary": max_abs(g.conj().T @ g - eye),
        "involution_inverts": max_abs(involution_apply(spec, g) - ginv),
        "determinant_one": abs(det(g) - 1.0),
    }
    if spec.so_like:
        v["orthogonal_structure"] = max_abs(antitranspose(g) - ginv)
    elif spec.sp_like:
        I = leading_signature(N, N // 2)
        v["symplectic_structure"] = max_abs(I @ antitranspose(ginv) @ I - g)
    return ImageReport(violations=v, tolerance=tol)
