"""Two-view epipolar geometry for calibrated cameras.

Conventions used throughout the package:

* Image points are homogeneous 3-vectors in normalized camera coordinates.
  Arrays of points have shape ``(N, 3)``; generated points carry ``w = 1``.
* A scene point ``X`` in the first camera frame maps to ``R @ X + t`` in the
  second, so corresponding points satisfy ``qp @ E @ q == 0`` with
  ``E = skew(t) @ R``.
* Essential matrices are compared after scaling to Frobenius norm sqrt(2)
  and taking the better of the two signs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DegenerateError

#: Infinitesimal generators of SO(3).  ``w1*G1 + w2*G2 + w3*G3`` equals
#: ``skew((-w3, w2, -w1))``.
G1 = np.array([[0.0, 1.0, 0.0], [-1.0, 0.0, 0.0], [0.0, 0.0, 0.0]])
G2 = np.array([[0.0, 0.0, 1.0], [0.0, 0.0, 0.0], [-1.0, 0.0, 0.0]])
G3 = np.array([[0.0, 0.0, 0.0], [0.0, 0.0, 1.0], [0.0, -1.0, 0.0]])
GENERATORS = np.stack([G1, G2, G3])

SQRT2 = math.sqrt(2.0)

# Denominator threshold for the epipolar errors (for ||E||_F = sqrt(2)).
EPIPOLE_EPS = 1e-12


def skew(t) -> np.ndarray:
    """Cross-product matrix: ``skew(t) @ v == np.cross(t, v)``."""
    t0, t1, t2 = (float(c) for c in t)
    return np.array([[0.0, -t2, t1], [t2, 0.0, -t0], [-t1, t0, 0.0]])


def so3_exp(w) -> np.ndarray:
    """Rotation ``exp(w1*G1 + w2*G2 + w3*G3)`` via the Rodrigues formula."""
    w1, w2, w3 = (float(c) for c in w)
    K = np.array([[0.0, w1, w2], [-w1, 0.0, w3], [-w2, -w3, 0.0]])
    theta2 = w1 * w1 + w2 * w2 + w3 * w3
    K2 = K @ K
    if theta2 < 1e-16:
        return np.eye(3) + K + 0.5 * K2
    theta = math.sqrt(theta2)
    a = math.sin(theta) / theta
    b = (1.0 - math.cos(theta)) / theta2
    return np.eye(3) + a * K + b * K2


def so3_log(R) -> np.ndarray:
    """Inverse of :func:`so3_exp` for rotation angles below pi."""
    R = np.asarray(R, dtype=float)
    cos_theta = min(1.0, max(-1.0, 0.5 * (np.trace(R) - 1.0)))
    theta = math.acos(cos_theta)
    A = 0.5 * (R - R.T)
    if theta < 1e-8:
        scale = 1.0 + theta * theta / 6.0
    else:
        scale = theta / math.sin(theta)
    A = A * scale
    # A = w1*G1 + w2*G2 + w3*G3
    return np.array([A[0, 1], A[0, 2], A[1, 2]])


def rotation_angle(R1, R2) -> float:
    """Angle in radians of the relative rotation ``R1^T R2``."""
    R = np.asarray(R1).T @ np.asarray(R2)
    # The antisymmetric part keeps precision at small angles.
    s = 0.5 * np.linalg.norm(np.array([R[2, 1] - R[1, 2], R[0, 2] - R[2, 0], R[1, 0] - R[0, 1]]))
    c = 0.5 * (np.trace(R) - 1.0)
    return math.atan2(s, c)


def vector_angle(a, b) -> float:
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return math.atan2(np.linalg.norm(np.cross(a, b)), float(a @ b))


def is_rotation(R, tol: float = 1e-12) -> bool:
    R = np.asarray(R, dtype=float)
    return (
        R.shape == (3, 3)
        and np.linalg.norm(R.T @ R - np.eye(3)) <= tol
        and abs(np.linalg.det(R) - 1.0) <= tol
    )


def rotation_with_first_column(t) -> np.ndarray:
    """A rotation whose first column is the unit vector ``t``."""
    t = np.asarray(t, dtype=float)
    t = t / np.linalg.norm(t)
    helper = np.eye(3)[int(np.argmin(np.abs(t)))]
    b = np.cross(t, helper)
    b /= np.linalg.norm(b)
    c = np.cross(t, b)
    return np.column_stack([t, b, c])


@dataclass(frozen=True)
class Matches:
    """A set of point correspondences ``(q, qp)``.

    ``labels`` holds ground-truth inlier flags when known; estimators never
    look at it.
    """

    q: np.ndarray
    qp: np.ndarray
    labels: Optional[np.ndarray] = None

    def __post_init__(self):
        q = np.atleast_2d(np.asarray(self.q, dtype=float))
        qp = np.atleast_2d(np.asarray(self.qp, dtype=float))
        if q.shape != qp.shape or q.shape[1] != 3:
            raise ValueError(f"expected two (N, 3) arrays, got {q.shape} and {qp.shape}")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "qp", qp)
        if self.labels is not None:
            labels = np.asarray(self.labels, dtype=bool)
            if labels.shape != (len(q),):
                raise ValueError("labels must have one entry per match")
            object.__setattr__(self, "labels", labels)

    @classmethod
    def from_xy(cls, xy, labels=None) -> "Matches":
        """Build from an ``(N, 4)`` array of ``qx qy q'x q'y`` rows (w = 1)."""
        xy = np.asarray(xy, dtype=float).reshape(-1, 4)
        ones = np.ones((len(xy), 1))
        return cls(np.hstack([xy[:, :2], ones]), np.hstack([xy[:, 2:], ones]), labels)

    def __len__(self) -> int:
        return len(self.q)

    def take(self, idx) -> "Matches":
        labels = None if self.labels is None else self.labels[idx]
        return Matches(self.q[idx], self.qp[idx], labels)

    def inliers(self) -> "Matches":
        if self.labels is None:
            raise ValueError("matches carry no ground-truth labels")
        return self.take(np.flatnonzero(self.labels))


@dataclass(frozen=True)
class EssentialPose:
    """Unconstrained 5-DoF parameterization of an essential matrix.

    ``rot`` is the relative rotation and ``trot`` a rotation whose first
    column is the unit translation direction.
    """

    rot: np.ndarray
    trot: np.ndarray

    @property
    def translation(self) -> np.ndarray:
        return self.trot[:, 0]

    @property
    def essential(self) -> np.ndarray:
        return essential_from_pose(self)

    def updated(self, delta) -> "EssentialPose":
        """Apply a 5-vector step: rotation on the left, translation on the right."""
        w1, w2, w3, v1, v2 = delta
        return EssentialPose(so3_exp((w1, w2, w3)) @ self.rot, self.trot @ so3_exp((v1, v2, 0.0)))

    @classmethod
    def from_rt(cls, R, t) -> "EssentialPose":
        return cls(np.asarray(R, dtype=float), rotation_with_first_column(t))


@dataclass(frozen=True)
class RelativePose:
    """Rotation and unit translation direction of the second camera."""

    rotation: np.ndarray
    translation: np.ndarray


def essential_from_pose(pose: EssentialPose) -> np.ndarray:
    return skew(pose.trot[:, 0]) @ pose.rot


def normalize_essential(E) -> np.ndarray:
    E = np.asarray(E, dtype=float)
    return E * (SQRT2 / np.linalg.norm(E))


def essential_distance(E1, E2) -> float:
    """Frobenius distance after norm and sign normalization."""
    A = normalize_essential(E1)
    B = normalize_essential(E2)
    return float(min(np.linalg.norm(A - B), np.linalg.norm(A + B)))


def essential_constraint_violation(E) -> tuple[float, float]:
    """Relative violation of ``det E = 0`` and of the trace constraint."""
    E = np.asarray(E, dtype=float)
    n3 = np.linalg.norm(E) ** 3
    EEt = E @ E.T
    trace_c = 2.0 * EEt @ E - np.trace(EEt) * E
    return abs(np.linalg.det(E)) / n3, float(np.linalg.norm(trace_c)) / n3


def residual(E, q, qp):
    """Algebraic epipolar residual ``qp^T E q`` (row-wise for ``(N, 3)`` input)."""
    q = np.asarray(q, dtype=float)
    qp = np.asarray(qp, dtype=float)
    return np.sum(qp * (q @ np.asarray(E).T), axis=-1)


def pose_derivatives(pose: EssentialPose) -> tuple[np.ndarray, np.ndarray]:
    """Return ``E`` and its five partial derivatives as a ``(5, 3, 3)`` array.

    The order is three rotation generators (left-multiplied) followed by
    two translation generators (right-multiplied into ``trot``).
    """
    R, Rt = pose.rot, pose.trot
    St = skew(Rt[:, 0])
    E = St @ R
    dE = np.empty((5, 3, 3))
    dE[:3] = St @ GENERATORS @ R
    # trot @ G1 @ e1 = -trot[:, 1], trot @ G2 @ e1 = -trot[:, 2]
    dE[3] = -skew(Rt[:, 1]) @ R
    dE[4] = -skew(Rt[:, 2]) @ R
    return E, dE


def residual_jacobian(pose: EssentialPose, q, qp) -> np.ndarray:
    """Derivatives of the residual w.r.t. ``(w1, w2, w3, v1, v2)``.

    Returns shape ``(5,)`` for a single match, ``(N, 5)`` for arrays.
    """
    _, dE = pose_derivatives(pose)
    q = np.asarray(q, dtype=float)
    qp = np.asarray(qp, dtype=float)
    return np.einsum("...i,kij,...j->...k", qp, dE, q)


def residuals_and_jacobian(pose: EssentialPose, q, qp) -> tuple[np.ndarray, np.ndarray]:
    """Residuals ``(N,)`` and Jacobian ``(N, 5)``; the hot path of the minimal solvers."""
    R, Rt = pose.rot, pose.trot
    u = q @ R.T
    # rows of qp @ [skew(t) | -skew(Rt e2) | -skew(Rt e3)]
    S = np.concatenate([skew(Rt[:, 0]), -skew(Rt[:, 1]), -skew(Rt[:, 2])], axis=1)
    P = (qp @ S).reshape(len(q), 3, 3)
    rt = np.einsum("nkj,nj->nk", P, u)
    a = P[:, 0]
    J = np.empty((len(q), 5))
    J[:, 0] = a[:, 0] * u[:, 1] - a[:, 1] * u[:, 0]
    J[:, 1] = a[:, 0] * u[:, 2] - a[:, 2] * u[:, 0]
    J[:, 2] = a[:, 1] * u[:, 2] - a[:, 2] * u[:, 1]
    J[:, 3:] = rt[:, 1:]
    return rt[:, 0], J


def _epipole_eps(E) -> float:
    return EPIPOLE_EPS * float(np.linalg.norm(E)) / SQRT2


def epipolar_errors(E, q, qp):
    """Signed point-to-epipolar-line distances ``(g, gp)``.

    ``g`` divides the residual by the norm of the first two components of
    ``E q`` and ``gp`` by those of ``E^T qp``.  A vanishing denominator
    (the point sits on an epipole) yields ``inf``.
    """
    E = np.asarray(E, dtype=float)
    q = np.asarray(q, dtype=float)
    qp = np.asarray(qp, dtype=float)
    Eq = q @ E.T
    Etqp = qp @ E
    r = np.sum(qp * Eq, axis=-1)
    n1 = np.hypot(Eq[..., 0], Eq[..., 1])
    n2 = np.hypot(Etqp[..., 0], Etqp[..., 1])
    eps = _epipole_eps(E)
    with np.errstate(divide="ignore", invalid="ignore"):
        g = np.where(n1 < eps, np.inf, r / np.where(n1 < eps, 1.0, n1))
        gp = np.where(n2 < eps, np.inf, r / np.where(n2 < eps, 1.0, n2))
    if g.ndim == 0:
        return float(g), float(gp)
    return g, gp


def epipolar_error(E, q, qp):
    """Per-match ``max(|g|, |gp|)``; ``inf`` for epipole-degenerate matches."""
    g, gp = epipolar_errors(E, q, qp)
    return np.maximum(np.abs(g), np.abs(gp))


def rms_epipolar_error(E, q, qp) -> float:
    e = np.atleast_1d(epipolar_error(E, q, qp))
    if e.size == 0:
        raise ValueError("rms_epipolar_error needs at least one match")
    return float(np.sqrt(np.mean(e * e)))


def _triangulate_many(R, t, q, qp):
    """Midpoint triangulation; returns points, both depths and a parallel-ray mask."""
    d1 = q
    d2 = qp @ R  # rows are R^T qp
    c2 = -R.T @ t
    a11 = np.einsum("ij,ij->i", d1, d1)
    a22 = np.einsum("ij,ij->i", d2, d2)
    a12 = np.einsum("ij,ij->i", d1, d2)
    b1 = d1 @ c2
    b2 = d2 @ c2
    det = a11 * a22 - a12 * a12
    sin_angle = np.linalg.norm(np.cross(d1, d2), axis=1) / np.sqrt(a11 * a22)
    parallel = sin_angle < 1e-8
    det = np.where(parallel, 1.0, det)
    # lam1*d1 - lam2*d2 ~= c2 in the least-squares sense
    lam1 = (a22 * b1 - a12 * b2) / det
    lam2 = (a12 * b1 - a11 * b2) / det
    X = 0.5 * (lam1[:, None] * d1 + c2 + lam2[:, None] * d2)
    depth1 = X[:, 2]
    depth2 = X @ R[2] + t[2]
    return X, depth1, depth2, parallel


def triangulate(pose: RelativePose, q, qp):
    """Midpoint triangulation of a single match.

    Returns ``(X, depth1, depth2)``: the point in first-camera coordinates
    and its signed depths in both cameras.  Raises :class:`DegenerateError`
    for rays closer than 1e-8 rad to parallel.
    """
    q = np.asarray(q, dtype=float).reshape(1, 3)
    qp = np.asarray(qp, dtype=float).reshape(1, 3)
    X, d1, d2, parallel = _triangulate_many(
        np.asarray(pose.rotation, dtype=float), np.asarray(pose.translation, dtype=float), q, qp
    )
    if parallel[0]:
        raise DegenerateError("rays are parallel; cannot triangulate")
    return X[0], float(d1[0]), float(d2[0])


_W = np.array([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]])


def essential_candidates(E, rank_tol: float = 1e-3):
    """The four ``(R, t)`` factorizations of ``E`` in the fixed order
    ``(Ra, +t), (Ra, -t), (Rb, +t), (Rb, -t)``.

    This is the SVD construction ``U W V^T`` rather than Horn's
    quaternion method; both give the same four candidates.
    """
    E = np.asarray(E, dtype=float)
    U, s, Vt = np.linalg.svd(E)
    if s[0] <= 0.0 or s[1] < rank_tol * s[0]:
        raise DegenerateError(f"essential matrix is numerically rank-1 (singular values {s})")
    if s[2] > rank_tol * s[0]:
        raise DegenerateError(f"essential matrix is numerically rank-3 (singular values {s})")
    if np.linalg.det(U) < 0:
        U = -U
    if np.linalg.det(Vt) < 0:
        Vt = -Vt
    Ra = U @ _W @ Vt
    Rb = U @ _W.T @ Vt
    t = U[:, 2]
    return [(Ra, t), (Ra, -t), (Rb, t), (Rb, -t)]


def decompose_essential(E, q, qp) -> RelativePose:
    """Recover ``(R, t)`` from ``E`` by chirality voting over the matches.

    The candidate with the most matches triangulating in front of both
    cameras wins; ties go to the earliest candidate.
    """
    q = np.atleast_2d(np.asarray(q, dtype=float))
    qp = np.atleast_2d(np.asarray(qp, dtype=float))
    best, best_votes = None, -1
    usable = 0
    for R, t in essential_candidates(E):
        _, d1, d2, parallel = _triangulate_many(R, t, q, qp)
        usable = max(usable, int(np.count_nonzero(~parallel)))
        votes = int(np.count_nonzero((d1 > 0) & (d2 > 0) & ~parallel))
        if votes > best_votes:
            best, best_votes = (R, t), votes
    if usable < 2:
        raise DegenerateError("need at least two non-degenerate matches for chirality")
    return RelativePose(best[0], best[1])


def pose_from_essential(E) -> EssentialPose:
    """Some 5-DoF pose reproducing ``E`` up to sign and scale (no chirality)."""
    R, t = essential_candidates(E)[0]
    return EssentialPose.from_rt(R, t)
