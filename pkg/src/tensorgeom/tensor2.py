"""Vectors and second-rank tensors on 3-space.

Everything works on plain ``numpy`` arrays: vectors are shape ``(3,)``,
tensors shape ``(3, 3)``.  The module covers the full algebra (dyads,
invariants, inverse/adjugate, the axial isomorphism, cross products),
spectral and polar decompositions, every rotation parameterization, and
mirror reflections.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "SingularTensor", "NotSkew", "NotSymmetric", "NotSPD",
    "NonPositiveDeterminant", "NotARotation", "AxisUndefined", "NotUnit",
    "SpectralDecomp", "AxisAngle", "PolarDecomp",
    "norm", "normalize", "dyad", "apply", "compose", "transpose",
    "sym_part", "skew_part", "spherical_part", "deviatoric_part",
    "trace", "inner", "tensor_norm", "det", "principal_invariants",
    "inverse", "adjugate", "determinant_suite",
    "axial_tensor", "axial_vector", "cross", "mixed",
    "eigen_sym", "sqrt_spd", "polar", "rotation_from_axis_angle",
    "rotation_to_axis_angle", "rotation_composed", "rot_x", "rot_y", "rot_z",
    "reflexion", "change_basis_vector", "change_basis_tensor",
    "is_rotation", "random_rotation",
]

I3 = np.eye(3)


class SingularTensor(ValueError):
    pass


class NotSkew(ValueError):
    pass


class NotSymmetric(ValueError):
    pass


class NotSPD(ValueError):
    def __init__(self, message, eigenvalue=None):
        super().__init__(message)
        self.eigenvalue = eigenvalue


class NonPositiveDeterminant(ValueError):
    pass


class NotARotation(ValueError):
    pass


class AxisUndefined(ValueError):
    pass


class NotUnit(ValueError):
    pass


# ---------------------------------------------------------------------------
# basic algebra
# ---------------------------------------------------------------------------

def norm(v) -> float:
    return float(np.linalg.norm(v))


def normalize(v) -> np.ndarray:
    n = norm(v)
    if n == 0.0:
        raise ValueError("cannot normalize the null vector")
    return np.asarray(v, dtype=float) / n


def dyad(u, v) -> np.ndarray:
    """Rank-one tensor with (u dyad v) w = (v.w) u."""
    return np.outer(u, v)


def apply(L, u) -> np.ndarray:
    return np.asarray(L, dtype=float) @ np.asarray(u, dtype=float)


def compose(A, B) -> np.ndarray:
    return np.asarray(A, dtype=float) @ np.asarray(B, dtype=float)


def transpose(L) -> np.ndarray:
    return np.asarray(L, dtype=float).T.copy()


def sym_part(L) -> np.ndarray:
    L = np.asarray(L, dtype=float)
    return 0.5 * (L + L.T)


def skew_part(L) -> np.ndarray:
    L = np.asarray(L, dtype=float)
    return 0.5 * (L - L.T)


def trace(L) -> float:
    return float(np.trace(L))


def spherical_part(L) -> np.ndarray:
    return (trace(L) / 3.0) * I3


def deviatoric_part(L) -> np.ndarray:
    return np.asarray(L, dtype=float) - spherical_part(L)


def inner(A, B) -> float:
    """Full contraction A_ij B_ij."""
    return float(np.einsum("ij,ij->", np.asarray(A, float), np.asarray(B, float)))


def tensor_norm(L) -> float:
    return math.sqrt(inner(L, L))


def det(L) -> float:
    L = np.asarray(L, dtype=float)
    return (L[0, 0] * L[1, 1] * L[2, 2] + L[0, 1] * L[1, 2] * L[2, 0]
            + L[0, 2] * L[2, 1] * L[1, 0]
            - L[0, 0] * L[1, 2] * L[2, 1] - L[1, 1] * L[0, 2] * L[2, 0]
            - L[2, 2] * L[0, 1] * L[1, 0])


def principal_invariants(L) -> tuple[float, float, float]:
    """I1 = tr L, I2 = (tr^2 L - tr L^2)/2, I3 = det L."""
    L = np.asarray(L, dtype=float)
    t = trace(L)
    i2 = 0.5 * (t * t - trace(L @ L))
    return t, i2, det(L)


def adjugate(L) -> np.ndarray:
    """Cofactor matrix: satisfies (L u) x (L v) = adjugate(L) (u x v)."""
    L = np.asarray(L, dtype=float)
    out = np.empty((3, 3))
    for i in range(3):
        for j in range(3):
            minor = np.delete(np.delete(L, i, axis=0), j, axis=1)
            out[i, j] = ((-1.0) ** (i + j)) * (minor[0, 0] * minor[1, 1]
                                               - minor[0, 1] * minor[1, 0])
    return out


def inverse(L, rel_tol: float = 1e-12) -> np.ndarray:
    L = np.asarray(L, dtype=float)
    d = det(L)
    scale = max(tensor_norm(L) ** 3, np.finfo(float).tiny)
    if abs(d) <= rel_tol * scale:
        raise SingularTensor(f"determinant {d:g} below tolerance")
    return adjugate(L).T / d


def determinant_suite(L, want_inverse: bool = True):
    """Determinant, principal invariants, inverse (None when singular), adjugate."""
    L = np.asarray(L, dtype=float)
    d = det(L)
    inv = None
    if want_inverse:
        try:
            inv = inverse(L)
        except SingularTensor:
            inv = None
    return d, principal_invariants(L), inv, adjugate(L)


# ---------------------------------------------------------------------------
# skew tensors, axial isomorphism, cross products
# ---------------------------------------------------------------------------

def axial_tensor(w) -> np.ndarray:
    """Skew tensor W with W u = w x u."""
    a, b, c = np.asarray(w, dtype=float)
    return np.array([[0.0, -c, b],
                     [c, 0.0, -a],
                     [-b, a, 0.0]])


def axial_vector(W, rel_tol: float = 1e-10) -> np.ndarray:
    W = np.asarray(W, dtype=float)
    nw = tensor_norm(W)
    if tensor_norm(W + W.T) > rel_tol * max(nw, np.finfo(float).tiny):
        raise NotSkew("symmetry residual above tolerance")
    return np.array([W[2, 1], W[0, 2], W[1, 0]])


def cross(a, b) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return np.array([a[1] * b[2] - a[2] * b[1],
                     a[2] * b[0] - a[0] * b[2],
                     a[0] * b[1] - a[1] * b[0]])


def mixed(a, b, c) -> float:
    """Triple product a x b . c (volume of the spanned prism, with sign)."""
    return float(np.dot(cross(a, b), c))


# ---------------------------------------------------------------------------
# spectral decomposition (cyclic Jacobi on 3x3 symmetric tensors)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SpectralDecomp:
    """Eigenvalues (descending) and orthonormal right-handed eigenvectors.

    ``vectors[:, k]`` is the unit eigenvector for ``values[k]``.
    """

    values: np.ndarray
    vectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return self.vectors @ np.diag(self.values) @ self.vectors.T

    def basis_tensor(self, k: int) -> np.ndarray:
        u = self.vectors[:, k]
        return np.outer(u, u)


def _off_norm(A) -> float:
    return math.sqrt(A[0, 1] ** 2 + A[0, 2] ** 2 + A[1, 2] ** 2)


def eigen_sym(L, rel_tol: float = 1e-10) -> SpectralDecomp:
    """Eigendecomposition of a symmetric tensor by cyclic Jacobi sweeps."""
    L = np.asarray(L, dtype=float)
    nL = tensor_norm(L)
    if tensor_norm(L - L.T) > rel_tol * max(nL, np.finfo(float).tiny):
        raise NotSymmetric("symmetry residual above tolerance")
    A = sym_part(L)
    V = np.eye(3)
    target = 1e-14 * max(nL, np.finfo(float).tiny)
    for _ in range(64):
        if _off_norm(A) <= target:
            break
        for p, q in ((0, 1), (0, 2), (1, 2)):
            apq = A[p, q]
            if apq == 0.0:
                continue
            # classic Jacobi rotation annihilating A[p, q]
            theta = 0.5 * (A[q, q] - A[p, p]) / apq
            t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(1.0 + theta * theta))
            c = 1.0 / math.sqrt(1.0 + t * t)
            s = t * c
            R = np.eye(3)
            R[p, p] = R[q, q] = c
            R[p, q] = s
            R[q, p] = -s
            A = R.T @ A @ R
            V = V @ R
    order = np.argsort(A.diagonal())[::-1]
    values = A.diagonal()[order].copy()
    vectors = V[:, order].copy()
    if mixed(vectors[:, 0], vectors[:, 1], vectors[:, 2]) < 0.0:
        vectors[:, 2] = -vectors[:, 2]
    return SpectralDecomp(values, vectors)


def sqrt_spd(L, rel_tol: float = 1e-12) -> np.ndarray:
    """Unique symmetric positive definite square root of an SPD tensor."""
    dec = eigen_sym(L)
    scale = max(abs(dec.values[0]), np.finfo(float).tiny)
    for lam in dec.values:
        if lam <= rel_tol * scale:
            raise NotSPD(f"eigenvalue {lam:g} is not positive", eigenvalue=lam)
    return dec.vectors @ np.diag(np.sqrt(dec.values)) @ dec.vectors.T


# ---------------------------------------------------------------------------
# polar decomposition
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PolarDecomp:
    """F = rotation @ right_stretch = left_stretch @ rotation."""

    rotation: np.ndarray
    right_stretch: np.ndarray
    left_stretch: np.ndarray


def polar(F) -> PolarDecomp:
    F = np.asarray(F, dtype=float)
    d = det(F)
    if d <= 1e-12 * max(tensor_norm(F) ** 3, np.finfo(float).tiny):
        raise NonPositiveDeterminant(f"det F = {d:g} is not positive")
    U = sqrt_spd(F.T @ F)
    R = F @ inverse(U)
    # one orthogonality polish step kills the rounding drift of U^-1
    R = R @ (1.5 * I3 - 0.5 * (R.T @ R))
    V = R @ U @ R.T
    return PolarDecomp(R, U, V)


# ---------------------------------------------------------------------------
# rotations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AxisAngle:
    """Unit rotation axis and amplitude in [0, pi]."""

    axis: np.ndarray
    angle: float


def is_rotation(R, tol: float = 1e-9) -> bool:
    R = np.asarray(R, dtype=float)
    return (tensor_norm(R @ R.T - I3) <= tol) and (abs(det(R) - 1.0) <= tol)


def rotation_from_axis_angle(axis, angle: float) -> np.ndarray:
    """R = I + sin(angle) W + (1 - cos(angle)) W^2 about a unit axis."""
    w = np.asarray(axis, dtype=float)
    if abs(norm(w) - 1.0) > 1e-12:
        raise NotUnit(f"axis norm {norm(w):.15g} != 1")
    W = axial_tensor(w)
    return I3 + math.sin(angle) * W + (1.0 - math.cos(angle)) * (W @ W)


def rotation_to_axis_angle(R, tol: float = 1e-9) -> AxisAngle:
    """Recover (axis, amplitude) from a proper rotation.

    The amplitude comes from the trace; near amplitude pi, where the skew
    part degenerates, the axis is taken from the symmetric part instead.
    Raises ``AxisUndefined`` below amplitude 1e-8 (the axis is arbitrary).
    """
    R = np.asarray(R, dtype=float)
    if not is_rotation(R, tol):
        raise NotARotation("input is not a proper rotation")
    cos_phi = max(-1.0, min(1.0, 0.5 * (trace(R) - 1.0)))
    phi = math.acos(cos_phi)
    if phi < 1e-8:
        raise AxisUndefined("amplitude below 1e-8; axis is arbitrary")
    w_skew = axial_vector(skew_part(R), rel_tol=np.inf)
    if phi < 3.0:  # sin(phi) well away from 0
        return AxisAngle(w_skew / math.sin(phi), phi)
    # near pi: (R + R^T)/2 - cos(phi) I = (1 - cos(phi)) w dyad w
    M = sym_part(R) - cos_phi * I3
    k = int(np.argmax(M.diagonal()))
    w = normalize(M[:, k])
    if np.dot(w, w_skew) < 0.0:
        w = -w
    return AxisAngle(w, phi)


def rot_x(a: float) -> np.ndarray:
    c, s = math.cos(a), math.sin(a)
    return np.array([[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]])


def rot_y(a: float) -> np.ndarray:
    # sign convention matching the composed coordinate-angles matrix
    c, s = math.cos(a), math.sin(a)
    return np.array([[c, 0.0, -s], [0.0, 1.0, 0.0], [s, 0.0, c]])


def rot_z(a: float) -> np.ndarray:
    c, s = math.cos(a), math.sin(a)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def rotation_composed(kind: str, angles) -> np.ndarray:
    """Build a rotation from three angles.

    kind="euler": precession/nutation/proper rotation, R = Rz Rx Rz.
    kind="coordinate": successive rotations about x, y, z.
    kind="physical": axis given by longitude and colatitude, then amplitude.
    """
    a1, a2, a3 = (float(a) for a in angles)
    if kind == "euler":
        return rot_z(a1) @ rot_x(a2) @ rot_z(a3)
    if kind == "coordinate":
        return rot_x(a1) @ rot_y(a2) @ rot_z(a3)
    if kind == "physical":
        longitude, colatitude, amplitude = a1, a2, a3
        axis = np.array([math.sin(colatitude) * math.cos(longitude),
                         math.sin(colatitude) * math.sin(longitude),
                         math.cos(colatitude)])
        return rotation_from_axis_angle(axis, amplitude)
    raise ValueError(f"unknown rotation kind {kind!r}")


def random_rotation(rng) -> np.ndarray:
    """Uniform-ish random proper rotation (for tests and demos)."""
    v = rng.normal(size=3)
    while norm(v) < 1e-12:
        v = rng.normal(size=3)
    return rotation_from_axis_angle(normalize(v), rng.uniform(0.0, math.pi))


# ---------------------------------------------------------------------------
# reflexions, change of basis
# ---------------------------------------------------------------------------

def reflexion(n) -> np.ndarray:
    """Mirror symmetry across the plane orthogonal to the unit vector n."""
    n = np.asarray(n, dtype=float)
    if abs(norm(n) - 1.0) > 1e-12:
        raise NotUnit(f"normal norm {norm(n):.15g} != 1")
    return I3 - 2.0 * np.outer(n, n)


def change_basis_vector(u, R) -> np.ndarray:
    """Components of u in the basis rotated by R: u' = R^T u."""
    _require_rotation(R)
    return np.asarray(R, dtype=float).T @ np.asarray(u, dtype=float)


def change_basis_tensor(L, R) -> np.ndarray:
    """Components of L in the basis rotated by R: L' = R^T L R."""
    _require_rotation(R)
    R = np.asarray(R, dtype=float)
    return R.T @ np.asarray(L, dtype=float) @ R


def _require_rotation(R):
    if not is_rotation(R):
        raise NotARotation("change of basis needs a proper rotation")
